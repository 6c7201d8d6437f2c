#include "gk/shortest_path_kernel.hpp"

#include <string>

#include "gk/errors.hpp"
#include "gk/walk_kernel.hpp"

namespace gk {

Graph sp_transform(const Graph& g) {
  const int n = g.num_vertices();
  DistanceMatrix dm = all_pairs_shortest_paths(g);
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (dm.finite(u, v)) edges.push_back({u, v, static_cast<int>(dm.d(u, v))});
  return Graph(n, std::move(edges), g.vertex_labels_copy(), true, g.attributes_copy());
}

std::vector<Graph> sp_transform_dataset(const Dataset& ds) {
  std::vector<Graph> out;
  out.reserve(ds.size());
  for (const auto& g : ds.graphs) out.push_back(sp_transform(g));
  return out;
}

double sp_kernel_on_transforms(const Graph& tg, const Graph& th, const VertexKernelSpec& kv,
                               const EdgeKernelSpec& klen) {
  return walk_kernel_implicit(tg, th, kv, klen, 1);
}

double sp_kernel_implicit(const Graph& g, const Graph& h, const VertexKernelSpec& kv, const EdgeKernelSpec& klen) {
  return sp_kernel_on_transforms(sp_transform(g), sp_transform(h), kv, klen);
}

FeatureVector sp_features_explicit(const Graph& g) {
  if (!g.has_vertex_labels() && g.has_attributes())
    throw ContractError("explicit shortest-path features need discrete vertex labels");
  const int n = g.num_vertices();
  DistanceMatrix dm = all_pairs_shortest_paths(g);
  std::vector<FeatureVector::Entry> entries;
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (u != v && dm.finite(u, v))
        entries.emplace_back(FeatureKey(KeyTag::ShortestPathTriple, {g.vertex_label(u), g.vertex_label(v), dm.d(u, v)}),
                             1.0);
  return FeatureVector::from_entries(std::move(entries));
}

LengthFeatureMap length_onehot_map() {
  return [](std::int64_t d) { return FeatureVector::from_entries({{FeatureKey(KeyTag::PathLength, {d}), 1.0}}); };
}

FeatureVector sp_features_approx(const Graph& g, const VertexFeatureMap& phi_v, const LengthFeatureMap& len_map,
                                 std::size_t max_nnz) {
  const int n = g.num_vertices();
  DistanceMatrix dm = all_pairs_shortest_paths(g);
  std::vector<FeatureVector> vertex_features;
  vertex_features.reserve(n);
  for (int v = 0; v < n; ++v) vertex_features.push_back(phi_v(g, v));
  std::vector<FeatureVector> length_features(static_cast<std::size_t>(n));  // index = distance
  FeatureBuilder builder;
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v) {
      if (u == v || !dm.finite(u, v)) continue;
      auto d = static_cast<std::size_t>(dm.d(u, v));
      if (length_features[d].empty()) length_features[d] = len_map(dm.d(u, v));
      builder.add(tensor_product(vertex_features[u], tensor_product(length_features[d], vertex_features[v])));
      if (builder.size() > max_nnz)
        throw ResourceError("shortest-path feature vector exceeds the budget of " + std::to_string(max_nnz) +
                            " features");
    }
  return std::move(builder).build();
}

}  // namespace gk
