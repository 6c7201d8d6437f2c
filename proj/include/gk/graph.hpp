#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace gk {

struct Edge {
  int u = 0;
  int v = 0;
  int label = 0;
};

/// Real-valued vertex annotations, row-major n x dim.
struct AttributeMatrix {
  int dim = 0;
  std::vector<double> values;
};

/// Undirected simple graph with optional discrete labels and real attributes.
///
/// Adjacency is stored as sorted CSR rows; for each neighbor entry the label
/// of the connecting edge is kept alongside. Graphs are immutable once built.
class Graph {
 public:
  Graph() = default;

  /// Throws ContractError on self-loops, parallel edges, out-of-range ids or
  /// annotation arrays of the wrong size.
  Graph(int num_vertices, std::vector<Edge> edges,
        std::optional<std::vector<int>> vertex_labels = std::nullopt,
        bool has_edge_labels = false,
        std::optional<AttributeMatrix> attributes = std::nullopt);

  int num_vertices() const { return n_; }
  std::size_t num_edges() const { return neighbors_.size() / 2; }

  std::span<const int> neighbors(int v) const {
    return {neighbors_.data() + offsets_[v], neighbors_.data() + offsets_[v + 1]};
  }
  /// Edge labels parallel to neighbors(v).
  std::span<const int> incident_edge_labels(int v) const {
    return {incident_labels_.data() + offsets_[v], incident_labels_.data() + offsets_[v + 1]};
  }
  int degree(int v) const { return static_cast<int>(offsets_[v + 1] - offsets_[v]); }

  bool has_edge(int u, int v) const;
  /// Label of edge uv, or std::nullopt if absent. Unlabeled graphs report 0.
  std::optional<int> edge_label(int u, int v) const;

  bool has_vertex_labels() const { return has_vlabels_; }
  bool has_edge_labels() const { return has_elabels_; }
  /// Uniform pseudo-label 0 when the graph carries no vertex labels.
  int vertex_label(int v) const { return vertex_labels_.empty() ? 0 : vertex_labels_[v]; }
  std::span<const int> vertex_labels() const { return vertex_labels_; }

  bool has_attributes() const { return attr_dim_ > 0; }
  int attribute_dim() const { return attr_dim_; }
  std::span<const double> attributes(int v) const {
    return {attributes_.data() + static_cast<std::size_t>(v) * attr_dim_,
            static_cast<std::size_t>(attr_dim_)};
  }
  std::span<const double> attribute_values() const { return attributes_; }

  /// Undirected edge list with u < v, sorted.
  std::vector<Edge> edges() const;

  std::optional<std::vector<int>> vertex_labels_copy() const;
  std::optional<AttributeMatrix> attributes_copy() const;

  /// Same structure with replaced vertex labels / attributes.
  Graph with_vertex_labels(std::optional<std::vector<int>> labels) const;
  Graph with_attributes(std::optional<AttributeMatrix> attributes) const;

  bool operator==(const Graph&) const = default;

 private:
  int n_ = 0;
  std::vector<std::size_t> offsets_{0};
  std::vector<int> neighbors_;
  std::vector<int> incident_labels_;
  std::vector<int> vertex_labels_;
  bool has_vlabels_ = false;
  bool has_elabels_ = false;
  int attr_dim_ = 0;
  std::vector<double> attributes_;
};

/// Verifies the structural invariants (symmetry, no loops, no parallel
/// edges, sorted rows). Throws ContractError describing the first violation.
void audit(const Graph& g);

struct Dataset {
  std::string name;
  std::vector<Graph> graphs;
  std::vector<int> class_labels;
  /// Number of distinct vertex labels over all graphs (0 if unlabeled).
  int label_alphabet_size = 0;

  std::size_t size() const { return graphs.size(); }
  bool operator==(const Dataset&) const = default;
};

/// Throws ContractError if class labels and graphs disagree in length or a
/// graph fails audit().
void audit(const Dataset& ds);

int count_vertex_alphabet(const std::vector<Graph>& graphs);

/// Dataset restricted to the given graph indices, in that order.
Dataset subset(const Dataset& ds, std::span<const std::size_t> indices);

// ---------------------------------------------------------------------------
// Shortest paths

inline constexpr std::int64_t kInfiniteDistance = std::numeric_limits<std::int64_t>::max();

/// All-pairs hop distances and (optionally) shortest-path multiplicities.
struct DistanceMatrix {
  int n = 0;
  std::vector<std::int64_t> dist;     // n*n, kInfiniteDistance when disconnected
  std::vector<std::uint64_t> counts;  // n*n, empty unless requested

  std::int64_t d(int u, int v) const { return dist[static_cast<std::size_t>(u) * n + v]; }
  std::uint64_t count(int u, int v) const { return counts[static_cast<std::size_t>(u) * n + v]; }
  bool finite(int u, int v) const { return d(u, v) != kInfiniteDistance; }
  bool has_counts() const { return !counts.empty(); }
};

/// BFS from every source. With `with_counts`, multiplicities follow the
/// layer recurrence sigma(v) = sum of sigma(u) over predecessors u; a 64-bit
/// overflow throws OverflowError.
DistanceMatrix all_pairs_shortest_paths(const Graph& g, bool with_counts = false);

/// Largest vertex count of a finite shortest path (diameter + 1) over all
/// graphs; 0 for a dataset without vertices.
int max_diameter(const Dataset& ds);

// ---------------------------------------------------------------------------
// Ingestion and generation

/// Reads `<name>_A.txt`, `<name>_graph_indicator.txt`, `<name>_graph_labels.txt`
/// and, when present, node labels, edge labels and node attributes.
Dataset load_tu_dataset(const std::string& root_path, const std::string& name);

/// Writes `ds` as a TU file family (edges listed in both directions).
void write_tu_dataset(const Dataset& ds, const std::string& root_path);

Dataset generate_synthetic_labeled(int count, double mean_vertices, double edge_prob,
                                   double p_v, std::uint64_t seed);

Dataset generate_synthetic_alphabet(int count, double mean_vertices, double edge_prob,
                                    int alphabet_size, std::uint64_t seed);

/// Unlabeled graphs with `dim`-dimensional attributes uniform in [0,1]. If
/// `levels` > 1 every coordinate is snapped to {0, 1/(levels-1), ..., 1}.
Dataset generate_synthetic_attributed(int count, double mean_vertices, double edge_prob,
                                      int dim, int levels, std::uint64_t seed);

/// Per-dimension min-max scaling to [0,1] over the whole dataset. Constant
/// dimensions map to 0. Throws ContractError if a graph lacks attributes or
/// dimensions differ.
Dataset scale_attributes(const Dataset& ds);

}  // namespace gk
