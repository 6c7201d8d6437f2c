#pragma once

#include <span>
#include <vector>

#include "gk/base_kernels.hpp"
#include "gk/features.hpp"
#include "gk/graph.hpp"

namespace gk {

/// Structural weight features phi^W(v) for every vertex of a dataset; the
/// weight kernel is k_W(v, v') = dot(phi^W(v), phi^W(v')).
struct WeightFeatureMap {
  enum class Kind { GraphInvariant, GraphHopper };

  Kind kind = Kind::GraphInvariant;
  /// WL iterations h for GraphInvariant, path vertex count bound for GraphHopper.
  int parameter = 0;
  /// per_graph[g][v]
  std::vector<std::vector<FeatureVector>> per_graph;

  std::span<const FeatureVector> of(std::size_t graph) const { return per_graph.at(graph); }
};

/// One-hot of the WL color (key: iteration, color) for iterations 0..h of a
/// refinement from uniform colors. Throws ParameterError for h < 0.
WeightFeatureMap graph_invariant_weight_maps(const Dataset& ds, int h);

/// Flattened M(v) with M(v)[i][j] counting shortest paths of j vertices
/// (all ordered source/target pairs, trivial paths included) that have v at
/// position i. Throws OverflowError naming the graph on counter overflow.
WeightFeatureMap graphhopper_weight_maps(const Dataset& ds);

/// Sum over vertex pairs of k_W(v, v') * k_V(v, v').
double wv_kernel_implicit(const Graph& g, std::span<const FeatureVector> wg, const Graph& h,
                          std::span<const FeatureVector> wh, const VertexKernelSpec& kv);

/// Sum over vertices of phi^W(v) (x) phi^V(v).
FeatureVector wv_features_explicit(const Graph& g, std::span<const FeatureVector> wg, const VertexFeatureMap& phi_v);

}  // namespace gk
