#include "gk/walk_kernel.hpp"

#include <algorithm>
#include <string>
#include <unordered_map>

#include "gk/errors.hpp"

namespace gk {

WeightedProductGraph build_wdpg(const Graph& g, const Graph& h, const VertexKernelSpec& kv,
                                const EdgeKernelSpec& ke) {
  kv.validate();
  const int n = g.num_vertices();
  const int m = h.num_vertices();
  WeightedProductGraph pg;
  std::vector<int> index(static_cast<std::size_t>(n) * m, -1);
  for (int u = 0; u < n; ++u)
    for (int s = 0; s < m; ++s) {
      double w = kv(g, u, h, s);
      if (w > 0.0) {
        index[static_cast<std::size_t>(u) * m + s] = static_cast<int>(pg.pairs.size());
        pg.pairs.emplace_back(u, s);
        pg.vertex_weight.push_back(w);
      }
    }

  struct ProductEdge {
    int a, b;
    double w;
  };
  std::vector<ProductEdge> edges;
  std::vector<std::size_t> degree(pg.pairs.size() + 1, 0);
  for (int a = 0; a < static_cast<int>(pg.pairs.size()); ++a) {
    auto [u, s] = pg.pairs[a];
    auto nu = g.neighbors(u);
    auto lu = g.incident_edge_labels(u);
    auto ns = h.neighbors(s);
    auto ls = h.incident_edge_labels(s);
    for (std::size_t i = 0; i < nu.size(); ++i) {
      const int* row = index.data() + static_cast<std::size_t>(nu[i]) * m;
      for (std::size_t j = 0; j < ns.size(); ++j) {
        int b = row[ns[j]];
        if (b <= a) continue;  // absent, or pair already handled from b
        double w = ke(lu[i], ls[j]);
        if (w > 0.0) {
          edges.push_back({a, b, w});
          ++degree[a];
          ++degree[b];
        }
      }
    }
  }
  pg.offsets.assign(pg.pairs.size() + 1, 0);
  for (std::size_t a = 0; a < pg.pairs.size(); ++a) pg.offsets[a + 1] = pg.offsets[a] + degree[a];
  pg.targets.resize(pg.offsets.back());
  pg.edge_weight.resize(pg.offsets.back());
  std::vector<std::size_t> fill(pg.offsets.begin(), pg.offsets.end() - 1);
  for (const auto& e : edges) {
    pg.targets[fill[e.a]] = e.b;
    pg.edge_weight[fill[e.a]++] = e.w;
    pg.targets[fill[e.b]] = e.a;
    pg.edge_weight[fill[e.b]++] = e.w;
  }
  return pg;
}

std::vector<double> walk_kernel_profile(const WeightedProductGraph& pg, int length) {
  if (length < 0) throw ParameterError("walk length must be >= 0");
  const std::size_t nv = pg.num_vertices();
  std::vector<double> prev(pg.vertex_weight), next(nv);
  std::vector<double> totals;
  totals.reserve(static_cast<std::size_t>(length) + 1);
  auto total = [](const std::vector<double>& r) {
    double s = 0.0;
    for (double x : r) s += x;
    return s;
  };
  totals.push_back(total(prev));
  for (int i = 1; i <= length; ++i) {
    for (std::size_t u = 0; u < nv; ++u) {
      double acc = 0.0;
      for (std::size_t e = pg.offsets[u]; e < pg.offsets[u + 1]; ++e) acc += pg.edge_weight[e] * prev[pg.targets[e]];
      next[u] = pg.vertex_weight[u] * acc;
    }
    std::swap(prev, next);
    totals.push_back(total(prev));
  }
  return totals;
}

double walk_kernel_implicit(const Graph& g, const Graph& h, const VertexKernelSpec& kv, const EdgeKernelSpec& ke,
                            int length) {
  if (length < 0) throw ParameterError("walk length must be >= 0");
  return walk_kernel_profile(build_wdpg(g, h, kv, ke), length).back();
}

double max_walk_kernel_implicit(const Graph& g, const Graph& h, const VertexKernelSpec& kv,
                                const EdgeKernelSpec& ke, int length, std::span<const double> lambda) {
  if (length < 0) throw ParameterError("walk length must be >= 0");
  if (lambda.size() != static_cast<std::size_t>(length) + 1)
    throw ParameterError("expected " + std::to_string(length + 1) + " walk weights, got " + std::to_string(lambda.size()));
  for (double l : lambda)
    if (!(l >= 0.0)) throw ParameterError("walk weights must be non-negative");
  auto profile = walk_kernel_profile(build_wdpg(g, h, kv, ke), length);
  double sum = 0.0;
  for (std::size_t i = 0; i < profile.size(); ++i) sum += lambda[i] * profile[i];
  return sum;
}

namespace {

struct Extension {
  int vertex_label;
  int edge_label;
  int suffix;  // id of the sequence of the shorter walk
  bool operator==(const Extension&) const = default;
};

struct ExtensionHash {
  std::size_t operator()(const Extension& e) const noexcept {
    std::uint64_t x = (static_cast<std::uint64_t>(static_cast<std::uint32_t>(e.vertex_label)) << 32) ^
                      static_cast<std::uint32_t>(e.edge_label);
    x ^= static_cast<std::uint64_t>(static_cast<std::uint32_t>(e.suffix)) * 0x9e3779b97f4a7c15ULL;
    x ^= x >> 31;
    return static_cast<std::size_t>(x * 0xbf58476d1ce4e5b9ULL);
  }
};

using SparseCounts = std::vector<std::pair<int, double>>;

void merge_counts(SparseCounts& v) {
  std::stable_sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::size_t out = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (out > 0 && v[out - 1].first == v[i].first) {
      v[out - 1].second += v[i].second;
    } else {
      v[out++] = v[i];
    }
  }
  v.resize(out);
}

}  // namespace

FeatureVector walk_features_explicit(const Graph& g, int length) {
  if (length < 0) throw ParameterError("walk length must be >= 0");
  if (!g.has_vertex_labels() && g.has_attributes())
    throw ContractError("explicit walk features need discrete vertex labels; use the implicit scheme for attributes");
  const int n = g.num_vertices();

  // Label sequences are interned level by level: a sequence of length i is
  // (vertex label, edge label, id of its length i-1 suffix).
  std::vector<int> base_labels;
  std::unordered_map<int, int> base_index;
  std::vector<std::vector<Extension>> levels(static_cast<std::size_t>(length) + 1);
  std::vector<SparseCounts> current(n);
  for (int v = 0; v < n; ++v) {
    auto [it, inserted] = base_index.try_emplace(g.vertex_label(v), static_cast<int>(base_labels.size()));
    if (inserted) base_labels.push_back(g.vertex_label(v));
    current[v] = {{it->second, 1.0}};
  }

  std::vector<SparseCounts> next(n);
  for (int i = 1; i <= length; ++i) {
    std::unordered_map<Extension, int, ExtensionHash> intern;
    auto& table = levels[i];
    for (int u = 0; u < n; ++u) {
      SparseCounts& acc = next[u];
      acc.clear();
      const int lu = g.vertex_label(u);
      auto nbrs = g.neighbors(u);
      auto elabels = g.incident_edge_labels(u);
      for (std::size_t k = 0; k < nbrs.size(); ++k) {
        for (const auto& [suffix, count] : current[nbrs[k]]) {
          Extension ext{lu, elabels[k], suffix};
          auto [it, inserted] = intern.try_emplace(ext, static_cast<int>(table.size()));
          if (inserted) table.push_back(ext);
          acc.emplace_back(it->second, count);
        }
      }
      merge_counts(acc);
    }
    std::swap(current, next);
  }

  SparseCounts totals;
  for (const auto& c : current) totals.insert(totals.end(), c.begin(), c.end());
  merge_counts(totals);

  std::vector<FeatureVector::Entry> entries;
  entries.reserve(totals.size());
  std::vector<std::int64_t> payload;
  for (const auto& [id, count] : totals) {
    payload.assign(1, length);
    int cur = id;
    for (int i = length; i >= 1; --i) {
      const Extension& e = levels[i][cur];
      payload.push_back(e.vertex_label);
      payload.push_back(e.edge_label);
      cur = e.suffix;
    }
    payload.push_back(base_labels[cur]);
    entries.emplace_back(FeatureKey(KeyTag::WalkSequence, payload), count);
  }
  return FeatureVector::from_entries(std::move(entries));
}

FeatureVector max_walk_features_explicit(const Graph& g, int length, std::span<const double> lambda) {
  if (length < 0) throw ParameterError("walk length must be >= 0");
  if (lambda.size() != static_cast<std::size_t>(length) + 1)
    throw ParameterError("expected " + std::to_string(length + 1) + " walk weights, got " + std::to_string(lambda.size()));
  std::vector<FeatureVector> parts;
  for (int i = 0; i <= length; ++i) parts.push_back(scale(walk_features_explicit(g, i), lambda[i]));
  return direct_sum(parts);
}

}  // namespace gk
