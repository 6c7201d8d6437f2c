#pragma once

#include <cstdint>
#include <compare>
#include <functional>
#include <iosfwd>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace gk {

/// Namespaces for feature identifiers. Keys from different tags never
/// compare equal.
enum class KeyTag : std::uint32_t {
  DirectSum = 1,
  Tensor = 2,
  ClassId = 3,
  Label = 4,
  Attribute = 5,
  Binning = 6,
  PathLength = 7,
  WalkSequence = 10,
  ShortestPathTriple = 11,
  Graphlet = 12,
  WlColor = 13,
  HopPosition = 14,
};

/// Feature identifier: a tag plus a sequence of signed integers, stored in a
/// canonical byte encoding (LEB128 tag, then zigzag-LEB128 per payload
/// element). The encoding is prefix-free per element, so equal bytes imply
/// equal (tag, payload). Ordering and hashing use the bytes only.
class FeatureKey {
 public:
  FeatureKey() = default;
  FeatureKey(KeyTag tag, std::span<const std::int64_t> payload);
  FeatureKey(KeyTag tag, std::initializer_list<std::int64_t> payload)
      : FeatureKey(tag, std::span<const std::int64_t>(payload.begin(), payload.size())) {}

  KeyTag tag() const;
  std::vector<std::int64_t> payload() const;
  const std::string& bytes() const { return bytes_; }

  /// "tag:p0,p1,..." for fixtures and diagnostics.
  std::string to_string() const;

  auto operator<=>(const FeatureKey& other) const { return bytes_.compare(other.bytes_) <=> 0; }
  bool operator==(const FeatureKey& other) const = default;

 private:
  std::string bytes_;
};

struct FeatureKeyHash {
  std::size_t operator()(const FeatureKey& k) const noexcept { return std::hash<std::string>{}(k.bytes()); }
};

/// Sparse real vector over FeatureKeys. Entries are kept sorted by key and
/// no stored weight is exactly 0.
class FeatureVector {
 public:
  using Entry = std::pair<FeatureKey, double>;

  FeatureVector() = default;

  /// Sums duplicate keys (in input order), drops exact zeros, sorts.
  static FeatureVector from_entries(std::vector<Entry> entries);

  std::size_t nnz() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  std::span<const Entry> entries() const { return entries_; }
  /// 0 when the key is absent.
  double weight(const FeatureKey& key) const;

  bool operator==(const FeatureVector&) const = default;

 private:
  std::vector<Entry> entries_;
};

/// Accumulates weights per key; single writer.
class FeatureBuilder {
 public:
  void add(const FeatureKey& key, double weight);
  void add(FeatureKey&& key, double weight);
  void add(const FeatureVector& v, double factor = 1.0);
  std::size_t size() const { return acc_.size(); }
  FeatureVector build() &&;

 private:
  std::unordered_map<FeatureKey, double, FeatureKeyHash> acc_;
};

/// Sum over common keys, accumulated in ascending key order. Cost is
/// O(min(nnz) log max(nnz)) when sizes are unbalanced, a linear merge
/// otherwise.
double dot(const FeatureVector& u, const FeatureVector& v);

/// Feature map of alpha * k: weights times sqrt(alpha). Throws
/// ParameterError for negative alpha.
FeatureVector scale(const FeatureVector& phi, double alpha);

/// Concatenation: keys of part i are namespaced by i, so
/// nnz(result) = sum of nnz(parts).
FeatureVector direct_sum(std::span<const FeatureVector> parts);

/// Kronecker product with keys (k_u, k_v).
FeatureVector tensor_product(const FeatureVector& u, const FeatureVector& v);
FeatureKey tensor_key(const FeatureKey& a, const FeatureKey& b);

/// Pointwise sum (feature map of the cross product kernel).
FeatureVector set_sum(std::span<const FeatureVector> parts);

/// `key<TAB>weight` lines in ascending key order.
void write_debug(std::ostream& out, const FeatureVector& v);
std::string to_debug_string(const FeatureVector& v);

}  // namespace gk
