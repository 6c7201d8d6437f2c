#include "gk/wl.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "gk/errors.hpp"

namespace gk {

std::size_t ColorTable::SignatureHash::operator()(const std::vector<int>& s) const noexcept {
  std::size_t h = 0x9e3779b97f4a7c15ULL ^ s.size();
  for (int c : s) h = (h ^ static_cast<std::size_t>(c)) * 0x100000001b3ULL + (h >> 29);
  return h;
}

int ColorTable::color(int iteration, const std::vector<int>& signature) {
  if (static_cast<int>(strata_.size()) <= iteration) strata_.resize(iteration + 1);
  auto& stratum = strata_[iteration];
  auto [it, inserted] = stratum.try_emplace(signature, static_cast<int>(stratum.size()));
  return it->second;
}

int ColorTable::colors_in(int iteration) const {
  return iteration < static_cast<int>(strata_.size()) ? static_cast<int>(strata_[iteration].size()) : 0;
}

int ColorAssignment::total_colors() const {
  return std::accumulate(colors_per_iteration.begin(), colors_per_iteration.end(), 0);
}

ColorAssignment wl_refine_dataset(const Dataset& ds, int h, WlInit init) {
  if (h < 0) throw ParameterError("number of refinement iterations must be >= 0");
  ColorTable table;
  ColorAssignment out;
  out.iterations = h;
  out.colors.resize(ds.size());

  std::vector<int> signature;
  for (std::size_t gi = 0; gi < ds.size(); ++gi) {
    const Graph& g = ds.graphs[gi];
    auto& tau0 = out.colors[gi].emplace_back(g.num_vertices());
    for (int v = 0; v < g.num_vertices(); ++v) {
      signature.assign(1, init == WlInit::Labels ? g.vertex_label(v) : 0);
      tau0[v] = table.color(0, signature);
    }
  }
  for (int i = 1; i <= h; ++i) {
    for (std::size_t gi = 0; gi < ds.size(); ++gi) {
      const Graph& g = ds.graphs[gi];
      const std::vector<int>& prev = out.colors[gi][i - 1];
      std::vector<int> next(g.num_vertices());
      for (int v = 0; v < g.num_vertices(); ++v) {
        signature.clear();
        for (int u : g.neighbors(v)) signature.push_back(prev[u]);
        std::sort(signature.begin(), signature.end());
        signature.insert(signature.begin(), prev[v]);
        next[v] = table.color(i, signature);
      }
      out.colors[gi].push_back(std::move(next));
    }
  }
  for (int i = 0; i <= h; ++i) out.colors_per_iteration.push_back(table.colors_in(i));
  return out;
}

Dataset relabel_with_colors(const Dataset& ds, const ColorAssignment& colors, int iteration) {
  if (iteration < 0 || iteration > colors.iterations) throw ParameterError("iteration out of range");
  Dataset out = ds;
  for (std::size_t gi = 0; gi < ds.size(); ++gi)
    out.graphs[gi] = ds.graphs[gi].with_vertex_labels(colors.at(gi, iteration));
  out.label_alphabet_size = colors.colors_per_iteration[iteration];
  return out;
}

}  // namespace gk
