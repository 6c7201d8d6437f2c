#include <doctest.h>

#include <cmath>
#include <memory>

#include "gk/base_kernels.hpp"
#include "gk/errors.hpp"

namespace {

gk::Graph attributed(std::vector<double> values, int dim) {
  int n = static_cast<int>(values.size()) / dim;
  return gk::Graph(n, {}, std::nullopt, false, gk::AttributeMatrix{dim, std::move(values)});
}

}  // namespace

TEST_CASE("hat, RBF and Brownian bridge values") {
  std::vector<double> x{0.2, 0.4}, y{0.5, 0.4};
  CHECK(gk::hat_kernel(x, y, 1.0) == doctest::Approx(0.7));
  CHECK(gk::hat_kernel(x, y, 0.3) == doctest::Approx(0.0));
  CHECK(gk::rbf_kernel(x, y, 1.0) == doctest::Approx(std::exp(-0.09 / 2)));
  CHECK(gk::brownian_bridge(4, 4, 3) == 3.0);
  CHECK(gk::brownian_bridge(4, 6, 3) == 1.0);
  CHECK(gk::brownian_bridge(4, 9, 3) == 0.0);
  CHECK(gk::brownian_bridge(gk::kInfiniteDistance, 2, 3) == 0.0);
  CHECK_THROWS_AS(gk::hat_kernel(x, y, 0.0), gk::ParameterError);
  std::vector<double> z{1.0};
  CHECK_THROWS_AS(gk::hat_kernel(x, z, 1.0), gk::ContractError);
}

TEST_CASE("random binning collision rate approaches the hat kernel") {
  auto g = attributed({0.3, 0.55}, 1);
  auto grid = std::make_shared<const gk::BinningGrid>(gk::sample_binning_grid(1, 1.0, 20000, 3));
  auto spec = gk::VertexKernelSpec::binned(grid);
  const double approx = spec(g, 0, g, 1);
  CHECK(approx == doctest::Approx(0.75).epsilon(0.03));
  auto map = gk::binning_map(grid);
  CHECK(gk::dot(map(g, 0), map(g, 1)) == doctest::Approx(approx).epsilon(1e-12));
  CHECK(gk::dot(map(g, 0), map(g, 0)) == doctest::Approx(1.0));
}

TEST_CASE("binning features have one key per grid with weight 1/sqrt(P)") {
  auto grid = gk::sample_binning_grid(2, 0.5, 4, 9);
  std::vector<double> x{0.1, 0.9};
  auto phi = gk::binning_features(x, grid);
  CHECK(phi.nnz() == 4);
  for (const auto& [k, w] : phi.entries()) CHECK(w == 0.5);
  CHECK_THROWS_AS(gk::sample_binning_grid(1, 0.0, 4, 1), gk::ParameterError);
}

TEST_CASE("vertex kernel specs validate parameters and dimensions") {
  CHECK_THROWS_AS(gk::VertexKernelSpec::hat(-1.0).validate(), gk::ParameterError);
  CHECK_THROWS_AS(gk::VertexKernelSpec::binned(nullptr).validate(), gk::ParameterError);
  auto a = attributed({0.1, 0.2}, 2);
  auto b = attributed({0.1}, 1);
  CHECK_THROWS_AS(gk::VertexKernelSpec::hat(1.0)(a, 0, b, 0), gk::ContractError);
  gk::Graph plain(1, {});
  CHECK_THROWS_AS(gk::VertexKernelSpec::rbf(1.0)(plain, 0, plain, 0), gk::ContractError);
  CHECK(gk::VertexKernelSpec::dirac_attributes()(a, 0, a, 0) == 1.0);
}

TEST_CASE("attribute one-hot map is the feature map of the Dirac attribute kernel") {
  auto g = attributed({0.5, 1.0, 0.5, -0.0, 0.0, 0.25}, 1);
  auto phi = gk::attribute_onehot_map();
  auto k = gk::VertexKernelSpec::dirac_attributes();
  for (int u = 0; u < 6; ++u)
    for (int v = 0; v < 6; ++v) CHECK(gk::dot(phi(g, u), phi(g, v)) == k(g, u, g, v));
}

TEST_CASE("binary kernels map to equivalence-class one-hots") {
  std::vector<int> items{3, 1, 3, 2, 1};
  auto dirac = [](int a, int b) { return a == b ? 1.0 : 0.0; };
  auto phi = gk::binary_feature_map<int>(items, dirac);
  for (std::size_t i = 0; i < items.size(); ++i)
    for (std::size_t j = 0; j < items.size(); ++j) CHECK(gk::dot(phi[i], phi[j]) == dirac(items[i], items[j]));

  auto partial = [](int a, int b) { return a == b && a != 2 ? 1.0 : 0.0; };
  auto phi2 = gk::binary_feature_map<int>(items, partial);
  CHECK(phi2[3].empty());

  auto not_transitive = [](int a, int b) { return std::abs(a - b) <= 1 ? 1.0 : 0.0; };
  CHECK_THROWS_AS(gk::binary_feature_map<int>(items, not_transitive), gk::InvalidKernelError);
  auto not_binary = [](int a, int b) { return a == b ? 2.0 : 0.0; };
  CHECK_THROWS_AS(gk::binary_feature_map<int>(items, not_binary), gk::InvalidKernelError);
  auto asymmetric = [](int a, int b) { return a <= b ? 1.0 : 0.0; };
  CHECK_THROWS_AS(gk::binary_feature_map<int>(items, asymmetric), gk::InvalidKernelError);
}
