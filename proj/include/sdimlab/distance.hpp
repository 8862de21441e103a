#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "sdimlab/graph.hpp"

namespace sdim {

/// All-pairs shortest-path lengths. Pairs in different components have no
/// distance; they are reported as std::nullopt, never as a large number.
class DistanceMatrix {
 public:
  DistanceMatrix() = default;
  explicit DistanceMatrix(std::size_t n);

  std::size_t order() const noexcept { return n_; }

  bool reachable(Vertex u, Vertex v) const { return raw(u, v) != kUnreachable; }
  std::optional<std::uint32_t> distance(Vertex u, Vertex v) const;
  /// Distance of a reachable pair; throws DIFFERENT_COMPONENTS otherwise.
  std::uint32_t at(Vertex u, Vertex v) const;

  /// Largest finite entry (0 for n <= 1).
  std::uint32_t diameter() const;

  void set(Vertex u, Vertex v, std::uint32_t d) { dist_[u * n_ + v] = static_cast<std::int32_t>(d); }

 private:
  static constexpr std::int32_t kUnreachable = -1;
  std::int32_t raw(Vertex u, Vertex v) const { return dist_[u * n_ + v]; }

  std::size_t n_ = 0;
  std::vector<std::int32_t> dist_;
};

/// BFS from every vertex.
DistanceMatrix all_pairs_distances(const Graph& g);

}  // namespace sdim
