#include <algorithm>
#include <string>
#include <vector>

#include "gk/errors.hpp"
#include "gk/graph.hpp"

namespace gk {

DistanceMatrix all_pairs_shortest_paths(const Graph& g, bool with_counts) {
  const int n = g.num_vertices();
  DistanceMatrix dm;
  dm.n = n;
  dm.dist.assign(static_cast<std::size_t>(n) * n, kInfiniteDistance);
  if (with_counts) dm.counts.assign(static_cast<std::size_t>(n) * n, 0);

  std::vector<int> queue(n);
  for (int s = 0; s < n; ++s) {
    std::int64_t* dist = dm.dist.data() + static_cast<std::size_t>(s) * n;
    std::uint64_t* sigma = with_counts ? dm.counts.data() + static_cast<std::size_t>(s) * n : nullptr;
    std::size_t head = 0, tail = 0;
    dist[s] = 0;
    if (sigma) sigma[s] = 1;
    queue[tail++] = s;
    while (head < tail) {
      int v = queue[head++];
      for (int w : g.neighbors(v)) {
        if (dist[w] == kInfiniteDistance) {
          dist[w] = dist[v] + 1;
          queue[tail++] = w;
        }
        if (sigma && dist[w] == dist[v] + 1) {
          if (__builtin_add_overflow(sigma[w], sigma[v], &sigma[w]))
            throw OverflowError("shortest-path multiplicity from vertex " + std::to_string(s) +
                                " to vertex " + std::to_string(w) + " exceeds 64 bits");
        }
      }
    }
  }
  return dm;
}

int max_diameter(const Dataset& ds) {
  int best = 0;
  for (const Graph& g : ds.graphs) {
    if (g.num_vertices() == 0) continue;
    DistanceMatrix dm = all_pairs_shortest_paths(g);
    std::int64_t longest = 0;
    for (std::int64_t d : dm.dist)
      if (d != kInfiniteDistance) longest = std::max(longest, d);
    best = std::max(best, static_cast<int>(longest) + 1);
  }
  return best;
}

}  // namespace gk
