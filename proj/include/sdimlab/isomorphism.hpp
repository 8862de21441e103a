#pragma once

#include <optional>
#include <vector>

#include "sdimlab/graph.hpp"

namespace sdim {

/// Exact isomorphism test by joint color refinement plus
/// individualization backtracking. Throws SIZE_LIMIT_EXCEEDED when either
/// graph exceeds SizeLimits::isomorphism vertices.
bool is_isomorphic(const Graph& a, const Graph& b);

/// The mapping a -> b witnessing isomorphism, if any.
std::optional<std::vector<Vertex>> find_isomorphism(const Graph& a, const Graph& b);

}  // namespace sdim
