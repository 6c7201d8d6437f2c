#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "gk/errors.hpp"
#include "gk/features.hpp"
#include "gk/graph.hpp"

namespace gk {

inline double dirac(long long a, long long b) { return a == b ? 1.0 : 0.0; }

/// Dimension-wise product of max{0, 1 - |x_i - y_i| / delta}.
double hat_kernel(std::span<const double> x, std::span<const double> y, double delta);

/// exp(-||x - y||^2 / (2 sigma^2)).
double rbf_kernel(std::span<const double> x, std::span<const double> y, double sigma);

/// max{0, c - |d - d'|}; 0 when either length is kInfiniteDistance.
double brownian_bridge(std::int64_t d, std::int64_t d_other, double c);

/// Randomly shifted grids of pitch `pitch`, one per iteration.
struct BinningGrid {
  int iterations = 0;
  int dim = 0;
  double pitch = 0.0;
  std::vector<double> shifts;  // iterations x dim, each in [0, pitch)

  double shift(int p, int j) const { return shifts[static_cast<std::size_t>(p) * dim + j]; }
};

BinningGrid sample_binning_grid(int dim, double pitch, int iterations, std::uint64_t seed);

/// One key (p, bin_1, ..., bin_dim) per iteration with weight 1/sqrt(P).
FeatureVector binning_features(std::span<const double> x, const BinningGrid& grid);

/// Kernel on vertices, possibly of different graphs.
struct VertexKernelSpec {
  enum class Kind { DiracLabel, DiracAttributes, HatAttributes, RbfAttributes, BinnedAttributes };

  Kind kind = Kind::DiracLabel;
  double bandwidth = 1.0;  // delta for hat, sigma for RBF
  std::shared_ptr<const BinningGrid> grid;

  static VertexKernelSpec dirac_label() { return {}; }
  static VertexKernelSpec dirac_attributes() { return {Kind::DiracAttributes, 1.0, nullptr}; }
  static VertexKernelSpec hat(double delta) { return {Kind::HatAttributes, delta, nullptr}; }
  static VertexKernelSpec rbf(double sigma) { return {Kind::RbfAttributes, sigma, nullptr}; }
  static VertexKernelSpec binned(std::shared_ptr<const BinningGrid> grid) {
    return {Kind::BinnedAttributes, grid ? grid->pitch : 1.0, std::move(grid)};
  }

  /// Throws ParameterError for a non-positive bandwidth or a missing grid.
  void validate() const;
  bool uses_attributes() const { return kind != Kind::DiracLabel; }
  std::string describe() const;

  double operator()(const Graph& g, int u, const Graph& h, int v) const {
    switch (kind) {
      case Kind::DiracLabel:
        return g.vertex_label(u) == h.vertex_label(v) ? 1.0 : 0.0;
      default:
        return eval_attributes(g, u, h, v);
    }
  }

 private:
  double eval_attributes(const Graph& g, int u, const Graph& h, int v) const;
};

/// Kernel on discrete edge annotations (edge labels or path lengths).
struct EdgeKernelSpec {
  enum class Kind { DiracLabel, Uniform, BrownianBridge, Custom };

  Kind kind = Kind::DiracLabel;
  double c = 3.0;
  std::function<double(std::int64_t, std::int64_t)> custom;

  static EdgeKernelSpec dirac_label() { return {}; }
  static EdgeKernelSpec uniform() { return {Kind::Uniform, 0.0, {}}; }
  static EdgeKernelSpec brownian(double c = 3.0) { return {Kind::BrownianBridge, c, {}}; }
  static EdgeKernelSpec from_function(std::function<double(std::int64_t, std::int64_t)> f) {
    return {Kind::Custom, 0.0, std::move(f)};
  }

  std::string describe() const;

  double operator()(std::int64_t a, std::int64_t b) const {
    switch (kind) {
      case Kind::DiracLabel:
        return a == b ? 1.0 : 0.0;
      case Kind::Uniform:
        return 1.0;
      case Kind::BrownianBridge:
        return brownian_bridge(a, b, c);
      case Kind::Custom:
        return custom(a, b);
    }
    return 0.0;
  }
};

/// Explicit map phi_V for vertices.
using VertexFeatureMap = std::function<FeatureVector(const Graph&, int)>;

/// One-hot on the discrete vertex label.
VertexFeatureMap label_onehot_map();
/// One-hot on the exact attribute vector (feature map of DiracAttributes).
VertexFeatureMap attribute_onehot_map();
/// Random binning map approximating the hat kernel of pitch grid->pitch.
VertexFeatureMap binning_map(std::shared_ptr<const BinningGrid> grid);

/// Feature map of a binary kernel over `items` via its equivalence classes.
/// Class ids follow first occurrence; items with k(x,x) = 0 map to the empty
/// vector. Throws InvalidKernelError if k is not symmetric, not 0/1 valued
/// or its relation is not transitive on the supplied items.
template <typename T, typename BinaryKernel>
std::vector<FeatureVector> binary_feature_map(std::span<const T> items, BinaryKernel&& k) {
  const std::size_t n = items.size();
  std::vector<std::vector<char>> rel(n, std::vector<char>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      double v = k(items[i], items[j]);
      if (v != 0.0 && v != 1.0)
        throw InvalidKernelError("kernel value " + std::to_string(v) + " is not binary for items " +
                                 std::to_string(i) + "," + std::to_string(j));
      rel[i][j] = v == 1.0;
    }
  std::vector<int> cls(n, -1);
  int next = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (rel[i][j] != rel[j][i])
        throw InvalidKernelError("kernel is not symmetric on items " + std::to_string(i) + "," + std::to_string(j));
      if (rel[i][j] && !rel[i][i])
        throw InvalidKernelError("item " + std::to_string(i) + " relates to " + std::to_string(j) +
                                 " but not to itself");
    }
    if (!rel[i][i]) continue;
    for (std::size_t j = 0; j < i && cls[i] < 0; ++j)
      if (rel[i][j]) cls[i] = cls[j];
    if (cls[i] < 0) cls[i] = next++;
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      bool same = cls[i] >= 0 && cls[i] == cls[j];
      if (same != static_cast<bool>(rel[i][j]))
        throw InvalidKernelError("kernel relation is not transitive around items " + std::to_string(i) + "," +
                                 std::to_string(j));
    }
  std::vector<FeatureVector> out(n);
  for (std::size_t i = 0; i < n; ++i)
    if (cls[i] >= 0) out[i] = FeatureVector::from_entries({{FeatureKey(KeyTag::ClassId, {cls[i]}), 1.0}});
  return out;
}

}  // namespace gk
