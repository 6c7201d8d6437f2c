#include "gk/features.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <ostream>
#include <sstream>

#include "gk/errors.hpp"

namespace gk {
namespace {

void put_varint(std::string& out, std::uint64_t x) {
  while (x >= 0x80) {
    out.push_back(static_cast<char>((x & 0x7f) | 0x80));
    x >>= 7;
  }
  out.push_back(static_cast<char>(x));
}

std::uint64_t get_varint(const std::string& in, std::size_t& pos) {
  std::uint64_t x = 0;
  int shift = 0;
  while (true) {
    auto byte = static_cast<unsigned char>(in.at(pos++));
    x |= static_cast<std::uint64_t>(byte & 0x7f) << shift;
    if (!(byte & 0x80)) return x;
    shift += 7;
  }
}

std::uint64_t zigzag(std::int64_t v) {
  return (static_cast<std::uint64_t>(v) << 1) ^ static_cast<std::uint64_t>(v >> 63);
}

std::int64_t unzigzag(std::uint64_t v) {
  return static_cast<std::int64_t>(v >> 1) ^ -static_cast<std::int64_t>(v & 1);
}

}  // namespace

FeatureKey::FeatureKey(KeyTag tag, std::span<const std::int64_t> payload) {
  bytes_.reserve(1 + payload.size() * 2);
  put_varint(bytes_, static_cast<std::uint64_t>(tag));
  for (std::int64_t x : payload) put_varint(bytes_, zigzag(x));
}

KeyTag FeatureKey::tag() const {
  std::size_t pos = 0;
  return static_cast<KeyTag>(get_varint(bytes_, pos));
}

std::vector<std::int64_t> FeatureKey::payload() const {
  std::vector<std::int64_t> out;
  std::size_t pos = 0;
  get_varint(bytes_, pos);
  while (pos < bytes_.size()) out.push_back(unzigzag(get_varint(bytes_, pos)));
  return out;
}

std::string FeatureKey::to_string() const {
  std::string s = std::to_string(static_cast<std::uint32_t>(tag())) + ":";
  bool first = true;
  for (std::int64_t x : payload()) {
    if (!first) s += ',';
    s += std::to_string(x);
    first = false;
  }
  return s;
}

FeatureVector FeatureVector::from_entries(std::vector<Entry> entries) {
  std::stable_sort(entries.begin(), entries.end(),
                   [](const Entry& a, const Entry& b) { return a.first < b.first; });
  FeatureVector out;
  out.entries_.reserve(entries.size());
  for (auto& e : entries) {
    if (!out.entries_.empty() && out.entries_.back().first == e.first) {
      out.entries_.back().second += e.second;
    } else {
      if (!out.entries_.empty() && out.entries_.back().second == 0.0) out.entries_.pop_back();
      out.entries_.push_back(std::move(e));
    }
  }
  if (!out.entries_.empty() && out.entries_.back().second == 0.0) out.entries_.pop_back();
  return out;
}

double FeatureVector::weight(const FeatureKey& key) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), key,
                             [](const Entry& e, const FeatureKey& k) { return e.first < k; });
  return it != entries_.end() && it->first == key ? it->second : 0.0;
}

void FeatureBuilder::add(const FeatureKey& key, double weight) { acc_[key] += weight; }

void FeatureBuilder::add(FeatureKey&& key, double weight) { acc_[std::move(key)] += weight; }

void FeatureBuilder::add(const FeatureVector& v, double factor) {
  for (const auto& [k, w] : v.entries()) acc_[k] += factor * w;
}

FeatureVector FeatureBuilder::build() && {
  std::vector<FeatureVector::Entry> entries;
  entries.reserve(acc_.size());
  for (auto& [k, w] : acc_)
    if (w != 0.0) entries.emplace_back(k, w);
  acc_.clear();
  return FeatureVector::from_entries(std::move(entries));
}

double dot(const FeatureVector& u, const FeatureVector& v) {
  auto small = u.entries();
  auto large = v.entries();
  if (small.size() > large.size()) std::swap(small, large);
  if (small.empty()) return 0.0;

  double sum = 0.0;
  if (small.size() * 8 < large.size()) {
    auto from = large.begin();
    for (const auto& [key, w] : small) {
      from = std::lower_bound(from, large.end(), key,
                              [](const FeatureVector::Entry& e, const FeatureKey& k) { return e.first < k; });
      if (from == large.end()) break;
      if (from->first == key) sum += w * from->second;
    }
    return sum;
  }
  auto a = small.begin();
  auto b = large.begin();
  while (a != small.end() && b != large.end()) {
    if (a->first < b->first) {
      ++a;
    } else if (b->first < a->first) {
      ++b;
    } else {
      sum += a->second * b->second;
      ++a;
      ++b;
    }
  }
  return sum;
}

FeatureVector scale(const FeatureVector& phi, double alpha) {
  if (!(alpha >= 0.0)) throw ParameterError("scaling factor must be non-negative");
  if (alpha == 0.0) return {};
  const double f = std::sqrt(alpha);
  std::vector<FeatureVector::Entry> entries(phi.entries().begin(), phi.entries().end());
  for (auto& e : entries) e.second *= f;
  return FeatureVector::from_entries(std::move(entries));
}

FeatureVector direct_sum(std::span<const FeatureVector> parts) {
  std::vector<FeatureVector::Entry> entries;
  std::vector<std::int64_t> payload;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    for (const auto& [k, w] : parts[i].entries()) {
      payload.assign({static_cast<std::int64_t>(i), static_cast<std::int64_t>(k.tag())});
      auto inner = k.payload();
      payload.insert(payload.end(), inner.begin(), inner.end());
      entries.emplace_back(FeatureKey(KeyTag::DirectSum, payload), w);
    }
  }
  return FeatureVector::from_entries(std::move(entries));
}

namespace {

void append_prefixed(std::vector<std::int64_t>& out, const FeatureKey& k) {
  auto p = k.payload();
  out.push_back(static_cast<std::int64_t>(k.tag()));
  out.push_back(static_cast<std::int64_t>(p.size()));
  out.insert(out.end(), p.begin(), p.end());
}

}  // namespace

FeatureKey tensor_key(const FeatureKey& a, const FeatureKey& b) {
  std::vector<std::int64_t> payload;
  append_prefixed(payload, a);
  append_prefixed(payload, b);
  return FeatureKey(KeyTag::Tensor, payload);
}

FeatureVector tensor_product(const FeatureVector& u, const FeatureVector& v) {
  std::vector<std::vector<std::int64_t>> left, right;
  for (const auto& e : u.entries()) {
    left.emplace_back();
    append_prefixed(left.back(), e.first);
  }
  for (const auto& e : v.entries()) {
    right.emplace_back();
    append_prefixed(right.back(), e.first);
  }
  std::vector<FeatureVector::Entry> entries;
  entries.reserve(u.nnz() * v.nnz());
  std::vector<std::int64_t> payload;
  for (std::size_t i = 0; i < left.size(); ++i)
    for (std::size_t j = 0; j < right.size(); ++j) {
      payload = left[i];
      payload.insert(payload.end(), right[j].begin(), right[j].end());
      entries.emplace_back(FeatureKey(KeyTag::Tensor, payload), u.entries()[i].second * v.entries()[j].second);
    }
  return FeatureVector::from_entries(std::move(entries));
}

FeatureVector set_sum(std::span<const FeatureVector> parts) {
  std::vector<FeatureVector::Entry> entries;
  for (const auto& p : parts) entries.insert(entries.end(), p.entries().begin(), p.entries().end());
  return FeatureVector::from_entries(std::move(entries));
}

void write_debug(std::ostream& out, const FeatureVector& v) {
  char buf[64];
  for (const auto& [k, w] : v.entries()) {
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, w);
    out << k.to_string() << '\t' << std::string_view(buf, static_cast<std::size_t>(ptr - buf)) << '\n';
  }
}

std::string to_debug_string(const FeatureVector& v) {
  std::ostringstream s;
  write_debug(s, v);
  return s.str();
}

}  // namespace gk
