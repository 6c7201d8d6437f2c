#include "gk/subgraph_kernels.hpp"

#include <algorithm>
#include <string>

#include "gk/errors.hpp"

namespace gk {

FeatureKey canonical_string(const LabeledTriple& t) {
  int present = 0;
  for (int e : t.edge_labels) present += e >= 0;
  if (present < 2) throw ContractError("graphlet triple is disconnected");
  // Slot of the edge between positions i and j.
  auto slot = [](int i, int j) {
    if (i > j) std::swap(i, j);
    return i == 0 ? j - 1 : 2;
  };
  std::array<int, 3> order{0, 1, 2};
  std::array<std::int64_t, 6> best{};
  bool first = true;
  do {
    std::array<std::int64_t, 6> s{};
    for (int i = 0; i < 3; ++i) s[i] = t.vertex_labels[order[i]];
    s[3] = t.edge_labels[slot(order[0], order[1])] + 1;
    s[4] = t.edge_labels[slot(order[0], order[2])] + 1;
    s[5] = t.edge_labels[slot(order[1], order[2])] + 1;
    if (first || s < best) best = s;
    first = false;
  } while (std::next_permutation(order.begin(), order.end()));
  return FeatureKey(KeyTag::Graphlet, best);
}

FeatureVector graphlet_features(const Graph& g) {
  // Every 2-path has a unique middle vertex; a triangle is taken at its
  // smallest vertex.
  std::vector<FeatureVector::Entry> entries;
  for (int c = 0; c < g.num_vertices(); ++c) {
    auto nbrs = g.neighbors(c);
    auto elabels = g.incident_edge_labels(c);
    for (std::size_t i = 0; i < nbrs.size(); ++i)
      for (std::size_t j = i + 1; j < nbrs.size(); ++j) {
        const int a = nbrs[i];
        const int b = nbrs[j];
        auto ab = g.edge_label(a, b);
        if (ab && c > a) continue;
        LabeledTriple t;
        t.vertex_labels = {g.vertex_label(c), g.vertex_label(a), g.vertex_label(b)};
        t.edge_labels = {elabels[i], elabels[j], ab ? *ab : -1};
        entries.emplace_back(canonical_string(t), 1.0);
      }
  }
  return FeatureVector::from_entries(std::move(entries));
}

AssociationGraph build_association_graph(const Graph& g, const Graph& h, const VertexKernelSpec& kv,
                                         const EdgeKernelSpec& ke) {
  kv.validate();
  AssociationGraph ag;
  for (int u = 0; u < g.num_vertices(); ++u)
    for (int s = 0; s < h.num_vertices(); ++s) {
      double w = kv(g, u, h, s);
      if (w > 0.0) {
        ag.pairs.emplace_back(u, s);
        ag.vertex_weight.push_back(w);
      }
    }
  const std::size_t m = ag.pairs.size();
  ag.edge_weight.assign(m * m, 0.0);
  ag.structural.assign(m * m, 0);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = a + 1; b < m; ++b) {
      auto [u, s] = ag.pairs[a];
      auto [v, t] = ag.pairs[b];
      if (u == v || s == t) continue;
      auto luv = g.edge_label(u, v);
      auto lst = h.edge_label(s, t);
      if (luv.has_value() != lst.has_value()) continue;
      double w = 1.0;
      bool edge = luv.has_value();
      if (edge) {
        w = ke(*luv, *lst);
        if (!(w > 0.0)) continue;
      }
      ag.edge_weight[a * m + b] = ag.edge_weight[b * m + a] = w;
      ag.structural[a * m + b] = ag.structural[b * m + a] = edge;
    }
  return ag;
}

namespace {

class CliqueSum {
 public:
  CliqueSum(const AssociationGraph& ag, const SubgraphMatchingOptions& opt, int max_size)
      : ag_(ag), opt_(opt), max_size_(max_size) {
    factorial_.assign(static_cast<std::size_t>(max_size) + 1, 1.0);
    for (int k = 1; k <= max_size; ++k) factorial_[k] = factorial_[k - 1] * k;
    lambda_.resize(static_cast<std::size_t>(max_size) + 1);
    for (int k = 1; k <= max_size; ++k) {
      lambda_[k] = opt.lambda ? opt.lambda(k) : 1.0;
      if (!(lambda_[k] >= 0.0)) throw ParameterError("clique size weight must be non-negative");
    }
  }

  double run() {
    std::vector<int> all(ag_.num_vertices());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);
    extend(all, 1.0);
    return total_;
  }

 private:
  bool connected() const {
    const std::size_t k = clique_.size();
    std::vector<char> seen(k, 0);
    std::vector<std::size_t> stack{0};
    seen[0] = 1;
    std::size_t reached = 1;
    while (!stack.empty()) {
      std::size_t i = stack.back();
      stack.pop_back();
      for (std::size_t j = 0; j < k; ++j)
        if (!seen[j] && ag_.is_structural(clique_[i], clique_[j])) {
          seen[j] = 1;
          ++reached;
          stack.push_back(j);
        }
    }
    return reached == k;
  }

  void extend(const std::vector<int>& candidates, double weight) {
    for (std::size_t ci = 0; ci < candidates.size(); ++ci) {
      const int c = candidates[ci];
      double w = weight * ag_.vertex_weight[c];
      for (int x : clique_) w *= ag_.weight(x, c);
      clique_.push_back(c);
      const int size = static_cast<int>(clique_.size());
      if (lambda_[size] > 0.0 && (!opt_.connected_only || connected())) {
        double contribution = lambda_[size] * w;
        if (opt_.divide_by_factorial) contribution /= factorial_[size];
        total_ += contribution;
      }
      if (size < max_size_) {
        std::vector<int> next;
        for (std::size_t cj = ci + 1; cj < candidates.size(); ++cj)
          if (ag_.weight(c, candidates[cj]) > 0.0) next.push_back(candidates[cj]);
        if (!next.empty()) extend(next, w);
      }
      clique_.pop_back();
    }
  }

  const AssociationGraph& ag_;
  const SubgraphMatchingOptions& opt_;
  int max_size_;
  std::vector<double> factorial_;
  std::vector<double> lambda_;
  std::vector<int> clique_;
  double total_ = 0.0;
};

}  // namespace

double subgraph_matching_kernel(const Graph& g, const Graph& h, const VertexKernelSpec& kv,
                                const EdgeKernelSpec& ke, const SubgraphMatchingOptions& options) {
  if (options.max_size < 1) throw ParameterError("subgraph size limit must be >= 1");
  AssociationGraph ag = build_association_graph(g, h, kv, ke);
  if (ag.num_vertices() == 0) return 0.0;
  const int cap = static_cast<int>(std::min<std::size_t>(static_cast<std::size_t>(options.max_size), ag.num_vertices()));
  return CliqueSum(ag, options, cap).run();
}

}  // namespace gk
