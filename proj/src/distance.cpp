#include "sdimlab/distance.hpp"

#include <algorithm>
#include <string>

#include "sdimlab/error.hpp"

namespace sdim {

DistanceMatrix::DistanceMatrix(std::size_t n) : n_(n), dist_(n * n, kUnreachable) {}

std::optional<std::uint32_t> DistanceMatrix::distance(Vertex u, Vertex v) const {
  const std::int32_t d = raw(u, v);
  if (d == kUnreachable) return std::nullopt;
  return static_cast<std::uint32_t>(d);
}

std::uint32_t DistanceMatrix::at(Vertex u, Vertex v) const {
  const std::int32_t d = raw(u, v);
  if (d == kUnreachable) {
    throw Error(ErrorCode::different_components,
                "vertices " + std::to_string(u) + " and " + std::to_string(v) + " are not connected");
  }
  return static_cast<std::uint32_t>(d);
}

std::uint32_t DistanceMatrix::diameter() const {
  std::int32_t best = 0;
  for (std::int32_t d : dist_) best = std::max(best, d);
  return static_cast<std::uint32_t>(best);
}

DistanceMatrix all_pairs_distances(const Graph& g) {
  const std::size_t n = g.order();
  DistanceMatrix d(n);
  std::vector<Vertex> queue(n);
  std::vector<std::uint32_t> level(n);
  std::vector<bool> seen(n);
  for (Vertex s = 0; s < n; ++s) {
    std::fill(seen.begin(), seen.end(), false);
    std::size_t head = 0, tail = 0;
    queue[tail++] = s;
    seen[s] = true;
    level[s] = 0;
    while (head < tail) {
      const Vertex v = queue[head++];
      d.set(s, v, level[v]);
      for (Vertex w : g.neighbors(v)) {
        if (seen[w]) continue;
        seen[w] = true;
        level[w] = level[v] + 1;
        queue[tail++] = w;
      }
    }
  }
  return d;
}

}  // namespace sdim
