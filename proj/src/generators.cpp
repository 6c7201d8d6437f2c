#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "gk/errors.hpp"
#include "gk/graph.hpp"
#include "gk/rng.hpp"

namespace gk {
namespace {

void check_probability(double p, const char* what) {
  if (!(p >= 0.0 && p <= 1.0)) throw ParameterError(std::string(what) + " must lie in [0,1], got " + std::to_string(p));
}

void check_common(int count, double mean_vertices, double edge_prob) {
  if (count < 1) throw ParameterError("graph count must be >= 1");
  if (!(mean_vertices > 0.0 && mean_vertices <= 700.0))
    throw ParameterError("mean vertex count must lie in (0,700]");
  check_probability(edge_prob, "edge probability");
}

int draw_order(Rng& rng, double mean) {
  std::uint64_t n = 0;
  while (n == 0) n = rng.poisson(mean);
  return static_cast<int>(n);
}

}  // namespace

Dataset generate_synthetic_labeled(int count, double mean_vertices, double edge_prob, double p_v,
                                   std::uint64_t seed) {
  check_common(count, mean_vertices, edge_prob);
  check_probability(p_v, "p_V");
  Rng rng(seed);
  Dataset ds;
  ds.name = "synthetic_labeled";
  for (int gi = 0; gi < count; ++gi) {
    const int n = draw_order(rng, mean_vertices);
    std::vector<int> labels(n);
    for (int v = 0; v < n; ++v) {
      if (rng.bernoulli(1.0 - p_v)) {
        labels[v] = 0;
      } else {
        labels[v] = rng.bernoulli(0.5) ? 1 : 2;
      }
    }
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (rng.bernoulli(edge_prob)) edges.push_back({u, v, 0});
    ds.graphs.emplace_back(n, std::move(edges), std::move(labels), true);
    ds.class_labels.push_back(0);
  }
  ds.label_alphabet_size = count_vertex_alphabet(ds.graphs);
  return ds;
}

Dataset generate_synthetic_alphabet(int count, double mean_vertices, double edge_prob, int alphabet_size,
                                    std::uint64_t seed) {
  check_common(count, mean_vertices, edge_prob);
  if (alphabet_size < 1) throw ParameterError("alphabet size must be >= 1");
  Rng rng(seed);
  const auto k = static_cast<std::uint64_t>(alphabet_size);
  Dataset ds;
  ds.name = "synthetic_alphabet";
  for (int gi = 0; gi < count; ++gi) {
    const int n = draw_order(rng, mean_vertices);
    std::vector<int> labels(n);
    for (int v = 0; v < n; ++v) labels[v] = static_cast<int>(rng.below(k));
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (rng.bernoulli(edge_prob)) edges.push_back({u, v, static_cast<int>(rng.below(k))});
    ds.graphs.emplace_back(n, std::move(edges), std::move(labels), true);
    ds.class_labels.push_back(0);
  }
  ds.label_alphabet_size = count_vertex_alphabet(ds.graphs);
  return ds;
}

Dataset generate_synthetic_attributed(int count, double mean_vertices, double edge_prob, int dim, int levels,
                                      std::uint64_t seed) {
  check_common(count, mean_vertices, edge_prob);
  if (dim < 1) throw ParameterError("attribute dimension must be >= 1");
  Rng rng(seed);
  Dataset ds;
  ds.name = "synthetic_attributed";
  for (int gi = 0; gi < count; ++gi) {
    const int n = draw_order(rng, mean_vertices);
    AttributeMatrix attrs{dim, std::vector<double>(static_cast<std::size_t>(n) * dim)};
    for (double& x : attrs.values) {
      if (levels > 1) {
        x = static_cast<double>(rng.below(static_cast<std::uint64_t>(levels))) / (levels - 1);
      } else {
        x = rng.uniform01();
      }
    }
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (rng.bernoulli(edge_prob)) edges.push_back({u, v, 0});
    ds.graphs.emplace_back(n, std::move(edges), std::nullopt, false, std::move(attrs));
    ds.class_labels.push_back(0);
  }
  return ds;
}

Dataset scale_attributes(const Dataset& ds) {
  int dim = -1;
  for (std::size_t i = 0; i < ds.graphs.size(); ++i) {
    const Graph& g = ds.graphs[i];
    if (!g.has_attributes()) throw ContractError("graph " + std::to_string(i) + " carries no attributes");
    if (dim >= 0 && g.attribute_dim() != dim)
      throw ContractError("graph " + std::to_string(i) + " has attribute dimension " +
                          std::to_string(g.attribute_dim()) + ", expected " + std::to_string(dim));
    dim = g.attribute_dim();
  }
  if (dim < 0) return ds;

  std::vector<double> lo(dim, std::numeric_limits<double>::infinity());
  std::vector<double> hi(dim, -std::numeric_limits<double>::infinity());
  for (const Graph& g : ds.graphs)
    for (int v = 0; v < g.num_vertices(); ++v) {
      auto row = g.attributes(v);
      for (int j = 0; j < dim; ++j) {
        lo[j] = std::min(lo[j], row[j]);
        hi[j] = std::max(hi[j], row[j]);
      }
    }

  Dataset out = ds;
  for (std::size_t i = 0; i < ds.graphs.size(); ++i) {
    AttributeMatrix m = *ds.graphs[i].attributes_copy();
    for (std::size_t k = 0; k < m.values.size(); ++k) {
      const auto j = k % static_cast<std::size_t>(dim);
      const double range = hi[j] - lo[j];
      m.values[k] = range > 0.0 ? (m.values[k] - lo[j]) / range : 0.0;
    }
    out.graphs[i] = ds.graphs[i].with_attributes(std::move(m));
  }
  return out;
}

}  // namespace gk
