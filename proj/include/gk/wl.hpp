#pragma once

#include <cstddef>
#include <unordered_map>
#include <vector>

#include "gk/graph.hpp"

namespace gk {

enum class WlInit {
  Uniform,  // refine the underlying unlabeled graph
  Labels,   // start from the discrete vertex labels
};

/// Injective map from (parent color, sorted neighbor colors) to dense color
/// ids, one stratum per iteration. Shared by all graphs of a dataset.
class ColorTable {
 public:
  /// Color for `signature` in iteration `iteration`, allocating a new one on
  /// first sight.
  int color(int iteration, const std::vector<int>& signature);
  int colors_in(int iteration) const;

 private:
  struct SignatureHash {
    std::size_t operator()(const std::vector<int>& s) const noexcept;
  };
  std::vector<std::unordered_map<std::vector<int>, int, SignatureHash>> strata_;
};

struct ColorAssignment {
  int iterations = 0;
  /// colors[graph][iteration][vertex]
  std::vector<std::vector<std::vector<int>>> colors;
  /// Distinct colors per iteration 0..h across the dataset.
  std::vector<int> colors_per_iteration;

  const std::vector<int>& at(std::size_t graph, int iteration) const { return colors[graph][iteration]; }
  /// Total number of colors appearing over all iterations.
  int total_colors() const;
};

ColorAssignment wl_refine_dataset(const Dataset& ds, int h, WlInit init);

/// Copy of `ds` whose vertex labels are the colors of iteration `iteration`.
Dataset relabel_with_colors(const Dataset& ds, const ColorAssignment& colors, int iteration);

}  // namespace gk
