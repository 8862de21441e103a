#include "sdimlab/limits.hpp"

#include <cstdlib>
#include <string>

namespace sdim {

SizeLimits size_limits() {
  SizeLimits limits;
  if (const char* env = std::getenv("SDIMLAB_SIZE_LIMIT")) {
    char* end = nullptr;
    const unsigned long long value = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && value > 0) {
      const auto cap = static_cast<std::size_t>(value);
      limits.isomorphism = cap;
      limits.hamiltonian = cap;
      limits.vertex_cover = cap;
      limits.matching = cap;
    }
  }
  return limits;
}

}  // namespace sdim
