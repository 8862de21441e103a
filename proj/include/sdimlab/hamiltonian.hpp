#pragma once

#include <optional>
#include <vector>

#include "sdimlab/graph.hpp"

namespace sdim {

/// A Hamiltonian cycle as a vertex sequence starting at 0 (the closing edge
/// back to the first vertex is implied), or nullopt when none exists.
/// Graphs with fewer than 3 vertices or more than one component have none.
/// Exact backtracking; throws SIZE_LIMIT_EXCEEDED above
/// SizeLimits::hamiltonian vertices.
std::optional<std::vector<Vertex>> hamiltonian_cycle(const Graph& g);

}  // namespace sdim
