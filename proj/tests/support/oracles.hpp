#pragma once

// Independent brute-force reference implementations. They share only the
// Graph container with the library and recompute everything else naively.

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <vector>

#include "gk/graph.hpp"

namespace oracle {

struct RandomGraphSpec {
  int min_n = 1;
  int max_n = 8;
  double p = 0.3;
  int vertex_alphabet = 0;  // 0 = unlabeled
  int edge_alphabet = 0;    // 0 = no edge labels
  int attr_dim = 0;
  int attr_levels = 0;      // 0 = continuous in [0,1)
};

gk::Graph random_graph(std::mt19937_64& rng, const RandomGraphSpec& spec);
gk::Dataset random_dataset(std::uint64_t seed, int count, const RandomGraphSpec& spec);

gk::Graph path_graph(int n, std::vector<int> labels = {});
gk::Graph complete_graph(int n);
gk::Graph single_edge(int la = 0, int lb = 0, int edge_label = 0, bool labeled = false);

using VertexFn = std::function<double(const gk::Graph&, int, const gk::Graph&, int)>;
using EdgeFn = std::function<double(std::int64_t, std::int64_t)>;

double dirac_vertex(const gk::Graph& g, int u, const gk::Graph& h, int v);
double dirac_edge(std::int64_t a, std::int64_t b);

/// All walks with `len` edges as vertex sequences.
std::vector<std::vector<int>> all_walks(const gk::Graph& g, int len);

/// Sum over walk pairs of prod k_V(v_i, w_i) * prod k_E(e_i, f_i).
double brute_walk_kernel(const gk::Graph& g, const gk::Graph& h, int len, const VertexFn& kv, const EdgeFn& ke);

/// Label sequence (l(v0), l(e1), l(v1), ...) -> number of walks.
std::map<std::vector<std::int64_t>, double> brute_walk_sequences(const gk::Graph& g, int len);

/// 1^T A^len 1 by repeated matrix-vector products.
std::int64_t walk_count(const gk::Graph& g, int len);

inline constexpr std::int64_t kUnreachable = -1;
std::vector<std::vector<std::int64_t>> floyd_warshall(const gk::Graph& g);

/// Sum over ordered pairs u != v, w != z at finite distances of
/// k_V(u,w) k_len(d_uv, d_wz) k_V(v,z).
double brute_sp_kernel(const gk::Graph& g, const gk::Graph& h, const VertexFn& kv, const EdgeFn& klen);

/// Every shortest path from s to t as a vertex sequence, by DFS over the
/// distance layers.
std::vector<std::vector<int>> all_shortest_paths(const gk::Graph& g, int s, int t);

/// M(v)[(i, j)] with 1-based position i on a shortest path of j vertices.
std::map<std::pair<int, int>, double> brute_hop_matrix(const gk::Graph& g, int v);

/// WL colors per iteration from uniform start, with string signatures
/// compressed over the whole dataset. colors[g][i][v].
std::vector<std::vector<std::vector<int>>> naive_wl(const gk::Dataset& ds, int h);

/// Labeled isomorphism of induced subgraphs on ordered vertex triples by
/// trying all bijections; returns the number of isomorphisms.
int triple_isomorphisms(const gk::Graph& g, const std::array<int, 3>& a, const gk::Graph& h,
                        const std::array<int, 3>& b);

/// Census of connected induced 3-vertex subgraphs: one representative per
/// isomorphism class with its count.
struct TripleClass {
  const gk::Graph* graph;
  std::array<int, 3> vertices;
  std::int64_t count;
};
std::vector<TripleClass> graphlet_census(const gk::Graph& g);

/// sum_c cnt_G(c) cnt_H(c) and sum_c cnt_G(c) cnt_H(c) aut(c).
struct CensusProducts {
  std::int64_t plain = 0;
  std::int64_t with_automorphisms = 0;
};
CensusProducts census_products(const gk::Graph& g, const gk::Graph& h);

/// Sum over injective partial maps f of at most `max_size` vertices with
/// agreeing edge presence of lambda(|S|) * prod k_V * prod k_E.
double brute_subgraph_matching(const gk::Graph& g, const gk::Graph& h, int max_size,
                               const std::function<double(int)>& lambda, bool connected_only, const VertexFn& kv,
                               const EdgeFn& ke);

/// Hat kernel recomputed directly.
double hat(const gk::Graph& g, int u, const gk::Graph& h, int v, double delta);

}  // namespace oracle
