#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <vector>

#include "gk/base_kernels.hpp"
#include "gk/features.hpp"
#include "gk/graph.hpp"

namespace gk {

/// Labeled graph on three vertices a, b, c. Edge slots are ab, ac, bc with
/// -1 marking an absent edge.
struct LabeledTriple {
  std::array<int, 3> vertex_labels{};
  std::array<int, 3> edge_labels{-1, -1, -1};
};

/// Lexicographic minimum over all six vertex orderings of
/// (l(a), l(b), l(c), e(ab), e(ac), e(bc)) with e = edge label + 1, 0 if
/// absent. Throws ContractError if the triple is disconnected.
FeatureKey canonical_string(const LabeledTriple& t);

/// Counts of connected induced 3-vertex subgraphs by canonical key.
FeatureVector graphlet_features(const Graph& g);

/// Weighted association graph of two graphs under induced matching.
struct AssociationGraph {
  std::vector<std::pair<int, int>> pairs;
  std::vector<double> vertex_weight;
  /// Dense |pairs| x |pairs| edge weights, 0 when not adjacent.
  std::vector<double> edge_weight;
  /// 1 where both factor pairs are edges, 0 for non-edge/non-edge links.
  std::vector<char> structural;

  std::size_t num_vertices() const { return pairs.size(); }
  double weight(std::size_t a, std::size_t b) const { return edge_weight[a * pairs.size() + b]; }
  bool is_structural(std::size_t a, std::size_t b) const { return structural[a * pairs.size() + b] != 0; }
};

AssociationGraph build_association_graph(const Graph& g, const Graph& h, const VertexKernelSpec& kv,
                                         const EdgeKernelSpec& ke);

struct SubgraphMatchingOptions {
  int max_size = 3;
  /// Weight per clique size; constant 1 when empty.
  std::function<double(int)> lambda;
  /// Count a clique only if its structural links connect all its vertices.
  bool connected_only = false;
  /// Divide each clique's contribution by size!.
  bool divide_by_factorial = false;

  /// lambda(size) = 1 for size == k, 0 otherwise.
  static std::function<double(int)> exactly(int k) {
    return [k](int s) { return s == k ? 1.0 : 0.0; };
  }
};

/// Sum over cliques C of size 1..max_size of lambda(|C|) times the product of
/// vertex and edge weights in C. Throws ParameterError if max_size < 1.
double subgraph_matching_kernel(const Graph& g, const Graph& h, const VertexKernelSpec& kv,
                                const EdgeKernelSpec& ke, const SubgraphMatchingOptions& options);

}  // namespace gk
