#pragma once

#include <span>
#include <utility>
#include <vector>

#include "gk/base_kernels.hpp"
#include "gk/features.hpp"
#include "gk/graph.hpp"

namespace gk {

/// Weighted direct product graph of two factor graphs.
///
/// Vertices are the pairs (u, u') with k_V(u, u') > 0, listed in
/// lexicographic order of (u, u'); that order is the total order used to
/// visit each undirected product edge once. Edges are stored in CSR form in
/// both directions with equal weights.
struct WeightedProductGraph {
  std::vector<std::pair<int, int>> pairs;
  std::vector<double> vertex_weight;
  std::vector<std::size_t> offsets{0};
  std::vector<int> targets;
  std::vector<double> edge_weight;

  std::size_t num_vertices() const { return pairs.size(); }
  std::size_t num_edges() const { return targets.size() / 2; }
};

WeightedProductGraph build_wdpg(const Graph& g, const Graph& h, const VertexKernelSpec& kv,
                                const EdgeKernelSpec& ke);

/// K_0, ..., K_length from one pass of the weighted walk recursion
/// r_i(u) = sum_{uv} w(u) w(uv) r_{i-1}(v), r_0 = w.
std::vector<double> walk_kernel_profile(const WeightedProductGraph& pg, int length);

/// Fixed-length walk kernel. Throws ParameterError for negative length.
double walk_kernel_implicit(const Graph& g, const Graph& h, const VertexKernelSpec& kv, const EdgeKernelSpec& ke,
                            int length);

/// sum_i lambda_i K_i for i = 0..length; lambda needs length + 1 entries >= 0.
double max_walk_kernel_implicit(const Graph& g, const Graph& h, const VertexKernelSpec& kv,
                                const EdgeKernelSpec& ke, int length, std::span<const double> lambda);

/// Label-sequence counts of all walks of the given length (Dirac vertex and
/// edge kernels). Key: (length, l(v0), l(e1), l(v1), ..., l(v_length)).
/// Throws ContractError for graphs with attributes but no discrete labels.
FeatureVector walk_features_explicit(const Graph& g, int length);

/// Direct sum of sqrt(lambda_i)-scaled walk features for i = 0..length.
FeatureVector max_walk_features_explicit(const Graph& g, int length, std::span<const double> lambda);

}  // namespace gk
