#include "gk/graph.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "gk/errors.hpp"

namespace gk {

Graph::Graph(int num_vertices, std::vector<Edge> edges, std::optional<std::vector<int>> vertex_labels,
             bool has_edge_labels, std::optional<AttributeMatrix> attributes)
    : n_(num_vertices), has_elabels_(has_edge_labels) {
  if (n_ < 0) throw ContractError("negative vertex count");
  if (vertex_labels) {
    if (static_cast<int>(vertex_labels->size()) != n_)
      throw ContractError("vertex label array has " + std::to_string(vertex_labels->size()) +
                          " entries for " + std::to_string(n_) + " vertices");
    vertex_labels_ = std::move(*vertex_labels);
    has_vlabels_ = true;
  }
  if (attributes) {
    if (attributes->dim < 1) throw ContractError("attribute dimension must be >= 1");
    if (attributes->values.size() != static_cast<std::size_t>(n_) * attributes->dim)
      throw ContractError("attribute matrix size does not match n x dim");
    attr_dim_ = attributes->dim;
    attributes_ = std::move(attributes->values);
  }

  std::vector<std::size_t> degree(n_ + 1, 0);
  for (const Edge& e : edges) {
    if (e.u < 0 || e.v < 0 || e.u >= n_ || e.v >= n_)
      throw ContractError("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                          ") references a vertex outside [0," + std::to_string(n_) + ")");
    if (e.u == e.v) throw ContractError("self-loop at vertex " + std::to_string(e.u));
    ++degree[e.u];
    ++degree[e.v];
  }
  offsets_.assign(n_ + 1, 0);
  for (int v = 0; v < n_; ++v) offsets_[v + 1] = offsets_[v] + degree[v];

  std::vector<std::pair<int, int>> slots(offsets_[n_]);
  std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
  for (const Edge& e : edges) {
    int label = has_elabels_ ? e.label : 0;
    slots[fill[e.u]++] = {e.v, label};
    slots[fill[e.v]++] = {e.u, label};
  }
  neighbors_.resize(slots.size());
  incident_labels_.resize(slots.size());
  for (int v = 0; v < n_; ++v) {
    auto first = slots.begin() + static_cast<std::ptrdiff_t>(offsets_[v]);
    auto last = slots.begin() + static_cast<std::ptrdiff_t>(offsets_[v + 1]);
    std::sort(first, last);
    for (auto it = first; it != last; ++it) {
      if (it != first && it->first == (it - 1)->first)
        throw ContractError("parallel edge between " + std::to_string(v) + " and " +
                            std::to_string(it->first));
      auto idx = static_cast<std::size_t>(it - slots.begin());
      neighbors_[idx] = it->first;
      incident_labels_[idx] = it->second;
    }
  }
}

bool Graph::has_edge(int u, int v) const {
  auto row = neighbors(u);
  return std::binary_search(row.begin(), row.end(), v);
}

std::optional<int> Graph::edge_label(int u, int v) const {
  auto row = neighbors(u);
  auto it = std::lower_bound(row.begin(), row.end(), v);
  if (it == row.end() || *it != v) return std::nullopt;
  return incident_edge_labels(u)[static_cast<std::size_t>(it - row.begin())];
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(num_edges());
  for (int u = 0; u < n_; ++u) {
    auto row = neighbors(u);
    auto labels = incident_edge_labels(u);
    for (std::size_t i = 0; i < row.size(); ++i)
      if (u < row[i]) out.push_back({u, row[i], labels[i]});
  }
  return out;
}

std::optional<std::vector<int>> Graph::vertex_labels_copy() const {
  if (!has_vlabels_) return std::nullopt;
  return vertex_labels_;
}

std::optional<AttributeMatrix> Graph::attributes_copy() const {
  if (attr_dim_ == 0) return std::nullopt;
  return AttributeMatrix{attr_dim_, attributes_};
}

Graph Graph::with_vertex_labels(std::optional<std::vector<int>> labels) const {
  return Graph(n_, edges(), std::move(labels), has_elabels_, attributes_copy());
}

Graph Graph::with_attributes(std::optional<AttributeMatrix> attributes) const {
  return Graph(n_, edges(), vertex_labels_copy(), has_elabels_, std::move(attributes));
}

void audit(const Graph& g) {
  for (int v = 0; v < g.num_vertices(); ++v) {
    auto row = g.neighbors(v);
    auto labels = g.incident_edge_labels(v);
    for (std::size_t i = 0; i < row.size(); ++i) {
      int u = row[i];
      if (u == v) throw ContractError("self-loop at vertex " + std::to_string(v));
      if (i > 0 && row[i - 1] >= u)
        throw ContractError("neighbor list of vertex " + std::to_string(v) + " not strictly sorted");
      auto back = g.edge_label(u, v);
      if (!back) throw ContractError("asymmetric adjacency between " + std::to_string(v) + " and " + std::to_string(u));
      if (*back != labels[i]) throw ContractError("edge label mismatch on " + std::to_string(v) + "-" + std::to_string(u));
    }
  }
  if (g.has_vertex_labels() && static_cast<int>(g.vertex_labels().size()) != g.num_vertices())
    throw ContractError("vertex label count differs from vertex count");
}

void audit(const Dataset& ds) {
  if (ds.class_labels.size() != ds.graphs.size())
    throw ContractError("dataset has " + std::to_string(ds.graphs.size()) + " graphs but " +
                        std::to_string(ds.class_labels.size()) + " class labels");
  int dim = -1;
  for (std::size_t i = 0; i < ds.graphs.size(); ++i) {
    try {
      audit(ds.graphs[i]);
    } catch (const Error& e) {
      rethrow_with_context(e, "graph " + std::to_string(i));
    }
    if (ds.graphs[i].has_attributes()) {
      if (dim >= 0 && dim != ds.graphs[i].attribute_dim())
        throw ContractError("graph " + std::to_string(i) + " has attribute dimension " +
                            std::to_string(ds.graphs[i].attribute_dim()) + ", expected " + std::to_string(dim));
      dim = ds.graphs[i].attribute_dim();
    }
  }
}

int count_vertex_alphabet(const std::vector<Graph>& graphs) {
  std::set<int> seen;
  for (const Graph& g : graphs)
    if (g.has_vertex_labels()) seen.insert(g.vertex_labels().begin(), g.vertex_labels().end());
  return static_cast<int>(seen.size());
}

Dataset subset(const Dataset& ds, std::span<const std::size_t> indices) {
  Dataset out;
  out.name = ds.name;
  out.graphs.reserve(indices.size());
  for (std::size_t i : indices) {
    out.graphs.push_back(ds.graphs.at(i));
    out.class_labels.push_back(ds.class_labels.at(i));
  }
  out.label_alphabet_size = count_vertex_alphabet(out.graphs);
  return out;
}

}  // namespace gk
