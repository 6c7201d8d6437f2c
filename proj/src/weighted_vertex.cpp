#include "gk/weighted_vertex.hpp"

#include <string>

#include "gk/errors.hpp"
#include "gk/wl.hpp"

namespace gk {

WeightFeatureMap graph_invariant_weight_maps(const Dataset& ds, int h) {
  if (h < 0) throw ParameterError("WL iteration count must be >= 0");
  ColorAssignment colors = wl_refine_dataset(ds, h, WlInit::Uniform);
  WeightFeatureMap map;
  map.kind = WeightFeatureMap::Kind::GraphInvariant;
  map.parameter = h;
  map.per_graph.resize(ds.size());
  for (std::size_t gi = 0; gi < ds.size(); ++gi) {
    const int n = ds.graphs[gi].num_vertices();
    auto& out = map.per_graph[gi];
    out.reserve(n);
    for (int v = 0; v < n; ++v) {
      std::vector<FeatureVector::Entry> entries;
      entries.reserve(static_cast<std::size_t>(h) + 1);
      for (int i = 0; i <= h; ++i) entries.emplace_back(FeatureKey(KeyTag::WlColor, {i, colors.at(gi, i)[v]}), 1.0);
      out.push_back(FeatureVector::from_entries(std::move(entries)));
    }
  }
  return map;
}

namespace {

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("shortest-path multiplicity overflows 64 bits");
  return r;
}

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("shortest-path position count overflows 64 bits");
  return r;
}

std::vector<FeatureVector> hop_features(const Graph& g, int delta) {
  const int n = g.num_vertices();
  DistanceMatrix dm = all_pairs_shortest_paths(g, true);
  std::vector<FeatureVector> out;
  out.reserve(n);
  std::vector<std::uint64_t> m(static_cast<std::size_t>(delta) * delta);
  for (int v = 0; v < n; ++v) {
    std::fill(m.begin(), m.end(), 0);
    for (int s = 0; s < n; ++s) {
      if (!dm.finite(s, v)) continue;
      const std::int64_t dsv = dm.d(s, v);
      for (int t = 0; t < n; ++t) {
        if (!dm.finite(v, t) || dm.d(s, t) != dsv + dm.d(v, t)) continue;
        std::size_t cell = static_cast<std::size_t>(dsv) * delta + static_cast<std::size_t>(dm.d(s, t));
        m[cell] = checked_add(m[cell], checked_mul(dm.count(s, v), dm.count(v, t)));
      }
    }
    std::vector<FeatureVector::Entry> entries;
    for (int i = 0; i < delta; ++i)
      for (int j = 0; j < delta; ++j)
        if (auto c = m[static_cast<std::size_t>(i) * delta + j])
          entries.emplace_back(FeatureKey(KeyTag::HopPosition, {i + 1, j + 1}), static_cast<double>(c));
    out.push_back(FeatureVector::from_entries(std::move(entries)));
  }
  return out;
}

}  // namespace

WeightFeatureMap graphhopper_weight_maps(const Dataset& ds) {
  WeightFeatureMap map;
  map.kind = WeightFeatureMap::Kind::GraphHopper;
  map.parameter = max_diameter(ds);
  map.per_graph.reserve(ds.size());
  for (std::size_t gi = 0; gi < ds.size(); ++gi) {
    try {
      map.per_graph.push_back(hop_features(ds.graphs[gi], map.parameter));
    } catch (const Error& e) {
      rethrow_with_context(e, "graph " + std::to_string(gi) + (ds.name.empty() ? "" : " of " + ds.name));
    }
  }
  return map;
}

double wv_kernel_implicit(const Graph& g, std::span<const FeatureVector> wg, const Graph& h,
                          std::span<const FeatureVector> wh, const VertexKernelSpec& kv) {
  if (wg.size() != static_cast<std::size_t>(g.num_vertices()) || wh.size() != static_cast<std::size_t>(h.num_vertices()))
    throw ContractError("weight features do not cover the graph's vertices");
  kv.validate();
  double sum = 0.0;
  for (int v = 0; v < g.num_vertices(); ++v)
    for (int w = 0; w < h.num_vertices(); ++w) {
      double kw = dot(wg[v], wh[w]);
      if (kw != 0.0) sum += kw * kv(g, v, h, w);
    }
  return sum;
}

FeatureVector wv_features_explicit(const Graph& g, std::span<const FeatureVector> wg, const VertexFeatureMap& phi_v) {
  if (wg.size() != static_cast<std::size_t>(g.num_vertices()))
    throw ContractError("weight features do not cover the graph's vertices");
  std::vector<FeatureVector> parts;
  parts.reserve(wg.size());
  for (int v = 0; v < g.num_vertices(); ++v) parts.push_back(tensor_product(wg[v], phi_v(g, v)));
  return set_sum(parts);
}

}  // namespace gk
