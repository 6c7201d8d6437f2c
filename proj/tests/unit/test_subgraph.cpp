#include <doctest.h>

#include <array>
#include <random>

#include "gk/errors.hpp"
#include "gk/subgraph_kernels.hpp"
#include "oracles.hpp"

namespace {

const auto kDirac = gk::VertexKernelSpec::dirac_label();
const auto kEdge = gk::EdgeKernelSpec::dirac_label();

gk::Graph triangle(std::vector<int> labels) { return gk::Graph(3, {{0, 1, 0}, {0, 2, 0}, {1, 2, 0}}, labels); }

gk::Graph triple_graph(const gk::LabeledTriple& t) {
  std::vector<gk::Edge> edges;
  const int ends[3][2] = {{0, 1}, {0, 2}, {1, 2}};
  for (int s = 0; s < 3; ++s)
    if (t.edge_labels[s] >= 0) edges.push_back({ends[s][0], ends[s][1], t.edge_labels[s]});
  return gk::Graph(3, edges, std::vector<int>(t.vertex_labels.begin(), t.vertex_labels.end()), true);
}

}  // namespace

TEST_CASE("graphlet counts of small graphs") {
  auto k3 = gk::graphlet_features(oracle::complete_graph(3));
  auto p4 = gk::graphlet_features(oracle::path_graph(4));
  CHECK(k3.nnz() == 1);
  CHECK(k3.entries()[0].second == 1.0);
  CHECK(p4.nnz() == 1);
  CHECK(p4.entries()[0].second == 2.0);
  CHECK(gk::dot(k3, p4) == 0.0);
  CHECK(gk::dot(p4, p4) == 4.0);
  CHECK(gk::dot(gk::graphlet_features(triangle({1, 1, 2})), gk::graphlet_features(triangle({1, 2, 2}))) == 0.0);
}

TEST_CASE("canonical strings are invariant under vertex reordering") {
  gk::LabeledTriple t{{4, 1, 4}, {2, -1, 0}};
  auto key = gk::canonical_string(t);
  std::array<int, 3> perm{0, 1, 2};
  const int ends[3][2] = {{0, 1}, {0, 2}, {1, 2}};
  do {
    gk::LabeledTriple p;
    std::array<int, 3> inv{};
    for (int i = 0; i < 3; ++i) {
      p.vertex_labels[perm[i]] = t.vertex_labels[i];
      inv[i] = perm[i];
    }
    for (int s = 0; s < 3; ++s) {
      int a = inv[ends[s][0]], b = inv[ends[s][1]];
      if (a > b) std::swap(a, b);
      int slot = a == 0 ? b - 1 : 2;
      p.edge_labels[slot] = t.edge_labels[s];
    }
    CHECK(gk::canonical_string(p) == key);
  } while (std::next_permutation(perm.begin(), perm.end()));
  gk::LabeledTriple tri{{1, 1, 1}, {0, 0, 0}}, path{{1, 1, 1}, {0, 0, -1}};
  CHECK(gk::canonical_string(tri) != gk::canonical_string(path));
  CHECK_THROWS_AS(gk::canonical_string(gk::LabeledTriple{{1, 1, 1}, {0, -1, -1}}), gk::ContractError);
}

TEST_CASE("canonical string equality coincides with labeled isomorphism") {
  std::mt19937_64 rng(51);
  std::vector<gk::LabeledTriple> triples;
  while (triples.size() < 50) {
    gk::LabeledTriple t;
    for (int& l : t.vertex_labels) l = static_cast<int>(rng() % 2);
    int present = 0;
    for (int& e : t.edge_labels) {
      e = static_cast<int>(rng() % 3) - 1;
      present += e >= 0;
    }
    if (present >= 2) triples.push_back(t);
  }
  const std::array<int, 3> id{0, 1, 2};
  for (const auto& a : triples)
    for (const auto& b : triples) {
      auto ga = triple_graph(a), gb = triple_graph(b);
      bool iso = oracle::triple_isomorphisms(ga, id, gb, id) > 0;
      CHECK((gk::canonical_string(a) == gk::canonical_string(b)) == iso);
    }
}

TEST_CASE("graphlet features match the brute-force census") {
  auto ds = oracle::random_dataset(52, 15, {1, 10, 0.4, 2, 2, 0, 0});
  for (const auto& g : ds.graphs)
    for (const auto& h : ds.graphs)
      CHECK(gk::dot(gk::graphlet_features(g), gk::graphlet_features(h)) ==
            static_cast<double>(oracle::census_products(g, h).plain));
}

TEST_CASE("subgraph matching examples") {
  auto e = oracle::single_edge();
  gk::SubgraphMatchingOptions opt;
  opt.max_size = 2;
  opt.connected_only = false;
  CHECK(gk::subgraph_matching_kernel(e, e, kDirac, kEdge, opt) == 6.0);
  gk::Graph a(2, {{0, 1, 0}}, std::vector<int>{1, 1});
  gk::Graph b(2, {{0, 1, 0}}, std::vector<int>{2, 2});
  CHECK(gk::subgraph_matching_kernel(a, b, kDirac, kEdge, opt) == 0.0);
  opt.max_size = 0;
  CHECK_THROWS_AS(gk::subgraph_matching_kernel(e, e, kDirac, kEdge, opt), gk::ParameterError);
  opt.max_size = 50;
  gk::SubgraphMatchingOptions capped = opt;
  capped.max_size = 4;
  CHECK(gk::subgraph_matching_kernel(e, e, kDirac, kEdge, opt) ==
        gk::subgraph_matching_kernel(e, e, kDirac, kEdge, capped));
}

TEST_CASE("association graph links only disjoint pairs with agreeing edge presence") {
  auto p3 = oracle::path_graph(3);
  auto ag = gk::build_association_graph(p3, p3, kDirac, kEdge);
  CHECK(ag.num_vertices() == 9);
  for (std::size_t a = 0; a < 9; ++a)
    for (std::size_t b = 0; b < 9; ++b) {
      auto [u, s] = ag.pairs[a];
      auto [v, t] = ag.pairs[b];
      bool expect = u != v && s != t && p3.has_edge(u, v) == p3.has_edge(s, t);
      CHECK((ag.weight(a, b) > 0.0) == expect);
      if (expect) CHECK(ag.is_structural(a, b) == p3.has_edge(u, v));
    }
}

TEST_CASE("connected size-3 matching counts graphlets with automorphisms") {
  auto ds = oracle::random_dataset(53, 8, {1, 8, 0.4, 2, 0, 0, 0});
  gk::SubgraphMatchingOptions opt;
  opt.max_size = 3;
  opt.lambda = gk::SubgraphMatchingOptions::exactly(3);
  opt.connected_only = true;
  for (const auto& g : ds.graphs)
    for (const auto& h : ds.graphs)
      CHECK(gk::subgraph_matching_kernel(g, h, kDirac, kEdge, opt) ==
            static_cast<double>(oracle::census_products(g, h).with_automorphisms));
}

TEST_CASE("subgraph matching equals enumeration of injective partial maps") {
  auto ds = oracle::random_dataset(54, 6, {1, 6, 0.5, 2, 2, 0, 0});
  auto ke = gk::EdgeKernelSpec::from_function([](std::int64_t a, std::int64_t b) { return a == b ? 1.0 : 0.25; });
  auto ke_fn = [](std::int64_t a, std::int64_t b) { return a == b ? 1.0 : 0.25; };
  auto lambda = [](int s) { return 1.0 / (s + 1); };
  for (bool connected : {false, true})
    for (bool factorial : {false, true})
      for (const auto& g : ds.graphs)
        for (const auto& h : ds.graphs) {
          gk::SubgraphMatchingOptions opt;
          opt.max_size = 3;
          opt.lambda = lambda;
          opt.connected_only = connected;
          opt.divide_by_factorial = factorial;
          double ref = oracle::brute_subgraph_matching(
              g, h, 3, [&](int s) { return factorial ? lambda(s) / (s == 1 ? 1 : s == 2 ? 2 : 6) : lambda(s); },
              connected, oracle::dirac_vertex, ke_fn);
          CHECK(gk::subgraph_matching_kernel(g, h, kDirac, ke, opt) == doctest::Approx(ref).epsilon(1e-12));
        }
}
