#pragma once

#include <cstddef>

namespace sdim {

/// Vertex caps for the exact exponential-time solvers. The environment
/// variable SDIMLAB_SIZE_LIMIT, when set to a positive integer, replaces
/// every cap with that value.
struct SizeLimits {
  std::size_t isomorphism = 40;
  std::size_t hamiltonian = 30;
  std::size_t vertex_cover = 40;
  std::size_t matching = 4096;
};

SizeLimits size_limits();

}  // namespace sdim
