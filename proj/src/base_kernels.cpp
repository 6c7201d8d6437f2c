#include "gk/base_kernels.hpp"

#include <cmath>
#include <cstdlib>
#include <cstring>
#include <string>

#include "gk/rng.hpp"

namespace gk {
namespace {

void check_dims(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size())
    throw ContractError("attribute dimension mismatch: " + std::to_string(x.size()) + " vs " + std::to_string(y.size()));
}

}  // namespace

double hat_kernel(std::span<const double> x, std::span<const double> y, double delta) {
  check_dims(x, y);
  if (!(delta > 0.0)) throw ParameterError("hat kernel bandwidth must be positive");
  double k = 1.0;
  for (std::size_t i = 0; i < x.size() && k > 0.0; ++i) k *= std::max(0.0, 1.0 - std::abs(x[i] - y[i]) / delta);
  return k;
}

double rbf_kernel(std::span<const double> x, std::span<const double> y, double sigma) {
  check_dims(x, y);
  if (!(sigma > 0.0)) throw ParameterError("RBF bandwidth must be positive");
  double sq = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) sq += (x[i] - y[i]) * (x[i] - y[i]);
  return std::exp(-sq / (2.0 * sigma * sigma));
}

double brownian_bridge(std::int64_t d, std::int64_t d_other, double c) {
  if (d == kInfiniteDistance || d_other == kInfiniteDistance) return 0.0;
  return std::max(0.0, c - static_cast<double>(std::llabs(d - d_other)));
}

BinningGrid sample_binning_grid(int dim, double pitch, int iterations, std::uint64_t seed) {
  if (dim < 1) throw ParameterError("binning dimension must be >= 1");
  if (!(pitch > 0.0)) throw ParameterError("binning pitch must be positive");
  if (iterations < 1) throw ParameterError("binning iteration count must be >= 1");
  BinningGrid grid;
  grid.iterations = iterations;
  grid.dim = dim;
  grid.pitch = pitch;
  grid.shifts.resize(static_cast<std::size_t>(iterations) * dim);
  Rng rng(seed);
  for (double& s : grid.shifts) {
    s = rng.uniform01() * pitch;
    if (s >= pitch) s = std::nextafter(pitch, 0.0);
  }
  return grid;
}

FeatureVector binning_features(std::span<const double> x, const BinningGrid& grid) {
  if (static_cast<int>(x.size()) != grid.dim)
    throw ContractError("attribute dimension " + std::to_string(x.size()) + " does not match binning grid dimension " +
                        std::to_string(grid.dim));
  const double w = 1.0 / std::sqrt(static_cast<double>(grid.iterations));
  std::vector<FeatureVector::Entry> entries;
  entries.reserve(grid.iterations);
  std::vector<std::int64_t> payload(static_cast<std::size_t>(grid.dim) + 1);
  for (int p = 0; p < grid.iterations; ++p) {
    payload[0] = p;
    for (int j = 0; j < grid.dim; ++j)
      payload[j + 1] = static_cast<std::int64_t>(std::floor((x[j] + grid.shift(p, j)) / grid.pitch));
    entries.emplace_back(FeatureKey(KeyTag::Binning, payload), w);
  }
  return FeatureVector::from_entries(std::move(entries));
}

void VertexKernelSpec::validate() const {
  switch (kind) {
    case Kind::HatAttributes:
    case Kind::RbfAttributes:
      if (!(bandwidth > 0.0)) throw ParameterError("vertex kernel bandwidth must be positive");
      break;
    case Kind::BinnedAttributes:
      if (!grid) throw ParameterError("binned vertex kernel requires a binning grid");
      break;
    default:
      break;
  }
}

std::string VertexKernelSpec::describe() const {
  switch (kind) {
    case Kind::DiracLabel: return "dirac-label";
    case Kind::DiracAttributes: return "dirac-attributes";
    case Kind::HatAttributes: return "hat(delta=" + std::to_string(bandwidth) + ")";
    case Kind::RbfAttributes: return "rbf(sigma=" + std::to_string(bandwidth) + ")";
    case Kind::BinnedAttributes:
      return "binned(P=" + std::to_string(grid ? grid->iterations : 0) + ",delta=" + std::to_string(bandwidth) + ")";
  }
  return "?";
}

double VertexKernelSpec::eval_attributes(const Graph& g, int u, const Graph& h, int v) const {
  if (!g.has_attributes() || !h.has_attributes()) throw ContractError("vertex kernel " + describe() + " needs attributes");
  auto x = g.attributes(u);
  auto y = h.attributes(v);
  switch (kind) {
    case Kind::DiracAttributes:
      check_dims(x, y);
      return std::equal(x.begin(), x.end(), y.begin()) ? 1.0 : 0.0;
    case Kind::HatAttributes:
      return hat_kernel(x, y, bandwidth);
    case Kind::RbfAttributes:
      return rbf_kernel(x, y, bandwidth);
    case Kind::BinnedAttributes: {
      check_dims(x, y);
      if (static_cast<int>(x.size()) != grid->dim) throw ContractError("binning grid dimension mismatch");
      int hits = 0;
      for (int p = 0; p < grid->iterations; ++p) {
        bool same = true;
        for (int j = 0; j < grid->dim && same; ++j)
          same = std::floor((x[j] + grid->shift(p, j)) / grid->pitch) ==
                 std::floor((y[j] + grid->shift(p, j)) / grid->pitch);
        hits += same;
      }
      return static_cast<double>(hits) / grid->iterations;
    }
    default:
      return 0.0;
  }
}

std::string EdgeKernelSpec::describe() const {
  switch (kind) {
    case Kind::DiracLabel: return "dirac";
    case Kind::Uniform: return "uniform";
    case Kind::BrownianBridge: return "brownian(c=" + std::to_string(c) + ")";
    case Kind::Custom: return "custom";
  }
  return "?";
}

VertexFeatureMap label_onehot_map() {
  return [](const Graph& g, int v) {
    return FeatureVector::from_entries({{FeatureKey(KeyTag::Label, {g.vertex_label(v)}), 1.0}});
  };
}

VertexFeatureMap attribute_onehot_map() {
  return [](const Graph& g, int v) {
    if (!g.has_attributes()) throw ContractError("attribute one-hot map needs attributes");
    auto x = g.attributes(v);
    std::vector<std::int64_t> payload;
    payload.reserve(x.size());
    for (double xi : x) {
      double canon = xi == 0.0 ? 0.0 : xi;  // -0.0 and 0.0 compare equal
      std::int64_t bits;
      std::memcpy(&bits, &canon, sizeof bits);
      payload.push_back(bits);
    }
    return FeatureVector::from_entries({{FeatureKey(KeyTag::Attribute, payload), 1.0}});
  };
}

VertexFeatureMap binning_map(std::shared_ptr<const BinningGrid> grid) {
  if (!grid) throw ParameterError("binning map requires a grid");
  return [grid = std::move(grid)](const Graph& g, int v) {
    if (!g.has_attributes()) throw ContractError("binning map needs attributes");
    return binning_features(g.attributes(v), *grid);
  };
}

}  // namespace gk
