#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>

#include "gk/base_kernels.hpp"
#include "gk/features.hpp"
#include "gk/graph.hpp"

namespace gk {

/// Complete graph on V(G) joining every pair at finite distance, with the
/// hop distance as edge label. Vertex labels and attributes are kept.
/// Pairs at infinite distance get no edge, so they contribute nothing.
Graph sp_transform(const Graph& g);
std::vector<Graph> sp_transform_dataset(const Dataset& ds);

/// Sum over ordered pairs u != v of G and w != z of H of
/// k_V(u,w) * k_len(d_uv, d_wz) * k_V(v,z).
double sp_kernel_implicit(const Graph& g, const Graph& h, const VertexKernelSpec& kv, const EdgeKernelSpec& klen);

/// Same value from precomputed transforms.
double sp_kernel_on_transforms(const Graph& tg, const Graph& th, const VertexKernelSpec& kv,
                               const EdgeKernelSpec& klen);

/// Counts of (l(u), l(v), d_uv) over ordered pairs u != v at finite distance.
/// Throws ContractError for graphs with attributes but no discrete labels.
FeatureVector sp_features_explicit(const Graph& g);

using LengthFeatureMap = std::function<FeatureVector(std::int64_t)>;

/// One-hot on the path length (feature map of the Dirac length kernel).
LengthFeatureMap length_onehot_map();

/// Sum over ordered pairs of phiV(u) (x) lenMap(d_uv) (x) phiV(v). Throws
/// ResourceError once the number of distinct features exceeds `max_nnz`.
FeatureVector sp_features_approx(const Graph& g, const VertexFeatureMap& phi_v, const LengthFeatureMap& len_map,
                                 std::size_t max_nnz = std::numeric_limits<std::size_t>::max());

}  // namespace gk
