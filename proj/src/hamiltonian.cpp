#include "sdimlab/hamiltonian.hpp"

#include <string>

#include "sdimlab/error.hpp"
#include "sdimlab/limits.hpp"

namespace sdim {

namespace {

class CycleSearch {
 public:
  explicit CycleSearch(const Graph& g) : g_(g), on_path_(g.order(), false) {}

  std::optional<std::vector<Vertex>> run() {
    path_.push_back(0);
    on_path_[0] = true;
    if (extend()) return path_;
    return std::nullopt;
  }

 private:
  // Every vertex still off the path needs two usable neighbors: other
  // off-path vertices or one of the two path ends.
  bool feasible() const {
    const Vertex head = path_.back();
    for (Vertex v = 0; v < g_.order(); ++v) {
      if (on_path_[v]) continue;
      int usable = 0;
      for (Vertex w : g_.neighbors(v)) {
        if (!on_path_[w] || w == head || w == 0) ++usable;
      }
      if (usable < 2) return false;
    }
    return true;
  }

  bool extend() {
    const Vertex head = path_.back();
    if (path_.size() == g_.order()) return g_.adjacent(head, 0);
    if (!feasible()) return false;
    for (Vertex w : g_.neighbors(head)) {
      if (on_path_[w]) continue;
      on_path_[w] = true;
      path_.push_back(w);
      if (extend()) return true;
      path_.pop_back();
      on_path_[w] = false;
    }
    return false;
  }

  const Graph& g_;
  std::vector<bool> on_path_;
  std::vector<Vertex> path_;
};

}  // namespace

std::optional<std::vector<Vertex>> hamiltonian_cycle(const Graph& g) {
  const std::size_t cap = size_limits().hamiltonian;
  if (g.order() > cap) {
    throw Error(ErrorCode::size_limit_exceeded,
                "Hamiltonian cycle search is capped at " + std::to_string(cap) + " vertices");
  }
  if (g.order() < 3 || g.min_degree() < 2 || !is_connected(g)) return std::nullopt;
  return CycleSearch(g).run();
}

}  // namespace sdim
