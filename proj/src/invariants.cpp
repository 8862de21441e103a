#include "sdimlab/invariants.hpp"

#include <algorithm>
#include <queue>
#include <string>

#include "sdimlab/distance.hpp"
#include "sdimlab/error.hpp"
#include "sdimlab/limits.hpp"

namespace sdim {

namespace {

void require_connected_pairable(const Graph& g, const char* what) {
  if (g.order() < 2) throw Error(ErrorCode::invalid_params, std::string(what) + " needs at least two vertices");
  if (!is_connected(g)) throw Error(ErrorCode::disconnected_input, std::string(what) + " needs a connected graph");
}

std::vector<VertexSet> pair_supports(const Graph& g, SupportKind kind) {
  const DistanceMatrix d = all_pairs_distances(g);
  std::vector<VertexSet> supports;
  supports.reserve(g.order() * (g.order() - 1) / 2);
  for (Vertex x = 0; x < g.order(); ++x) {
    for (Vertex y = x + 1; y < g.order(); ++y) {
      supports.push_back(kind == SupportKind::strong ? s_set(g, d, x, y).support : sl_set(g, d, x, y).support);
    }
  }
  return supports;
}

StrongResolution solve_covering(std::size_t n, std::vector<VertexSet> constraints) {
  LpSolution solved = lp_solve(LpProblem{n, std::move(constraints)});
  if (solved.status != LpStatus::optimal) {
    throw Error(ErrorCode::invariant_violation, "resolving LP has no optimum");
  }
  return {solved.value, std::move(solved.assignment)};
}

// Edmonds' blossom algorithm, O(V^3).
class BlossomMatcher {
 public:
  explicit BlossomMatcher(const Graph& g)
      : g_(g), n_(g.order()), match_(n_, kNone), parent_(n_), base_(n_), used_(n_), blossom_(n_) {}

  std::vector<Edge> run() {
    for (Vertex v = 0; v < n_; ++v) {
      if (match_[v] != kNone) continue;
      for (Vertex w : g_.neighbors(v)) {
        if (match_[w] == kNone) {
          match_[v] = w;
          match_[w] = v;
          break;
        }
      }
    }
    for (Vertex v = 0; v < n_; ++v) {
      if (match_[v] != kNone) continue;
      Vertex u = find_augmenting_path(v);
      while (u != kNone) {
        const Vertex pu = parent_[u];
        const Vertex next = match_[pu];
        match_[u] = pu;
        match_[pu] = u;
        u = next;
      }
    }
    std::vector<Edge> out;
    for (Vertex v = 0; v < n_; ++v) {
      if (match_[v] != kNone && v < match_[v]) out.emplace_back(v, match_[v]);
    }
    return out;
  }

 private:
  static constexpr Vertex kNone = static_cast<Vertex>(-1);

  Vertex lowest_common_ancestor(Vertex a, Vertex b) {
    std::vector<bool> seen(n_, false);
    while (true) {
      a = base_[a];
      seen[a] = true;
      if (match_[a] == kNone) break;
      a = parent_[match_[a]];
    }
    while (true) {
      b = base_[b];
      if (seen[b]) return b;
      b = parent_[match_[b]];
    }
  }

  void mark_path(Vertex v, Vertex b, Vertex child) {
    while (base_[v] != b) {
      blossom_[base_[v]] = blossom_[base_[match_[v]]] = true;
      parent_[v] = child;
      child = match_[v];
      v = parent_[match_[v]];
    }
  }

  Vertex find_augmenting_path(Vertex root) {
    std::fill(used_.begin(), used_.end(), false);
    std::fill(parent_.begin(), parent_.end(), kNone);
    for (Vertex i = 0; i < n_; ++i) base_[i] = i;
    used_[root] = true;
    std::queue<Vertex> queue;
    queue.push(root);
    while (!queue.empty()) {
      const Vertex v = queue.front();
      queue.pop();
      for (Vertex to : g_.neighbors(v)) {
        if (base_[v] == base_[to] || match_[v] == to) continue;
        if (to == root || (match_[to] != kNone && parent_[match_[to]] != kNone)) {
          const Vertex current = lowest_common_ancestor(v, to);
          std::fill(blossom_.begin(), blossom_.end(), false);
          mark_path(v, current, to);
          mark_path(to, current, v);
          for (Vertex i = 0; i < n_; ++i) {
            if (!blossom_[base_[i]]) continue;
            base_[i] = current;
            if (!used_[i]) {
              used_[i] = true;
              queue.push(i);
            }
          }
        } else if (parent_[to] == kNone) {
          parent_[to] = v;
          if (match_[to] == kNone) return to;
          used_[match_[to]] = true;
          queue.push(match_[to]);
        }
      }
    }
    return kNone;
  }

  const Graph& g_;
  std::size_t n_;
  std::vector<Vertex> match_, parent_, base_;
  std::vector<bool> used_, blossom_;
};

// Branch and bound with degree-0 / degree-1 reductions and a maximal
// matching lower bound.
class VertexCoverSolver {
 public:
  explicit VertexCoverSolver(const Graph& g) : g_(g), best_size_(g.order() + 1) {}

  VertexSet run() {
    std::vector<char> alive(g_.order(), 1), cover(g_.order(), 0);
    branch(std::move(alive), std::move(cover), 0);
    VertexSet out;
    for (Vertex v = 0; v < g_.order(); ++v) {
      if (best_cover_[v]) out.push_back(v);
    }
    return out;
  }

 private:
  std::size_t live_degree(const std::vector<char>& alive, Vertex v) const {
    std::size_t d = 0;
    for (Vertex w : g_.neighbors(v)) d += alive[w] ? 1 : 0;
    return d;
  }

  std::size_t matching_bound(const std::vector<char>& alive) const {
    std::vector<char> matched(g_.order(), 0);
    std::size_t size = 0;
    for (Vertex v = 0; v < g_.order(); ++v) {
      if (!alive[v] || matched[v]) continue;
      for (Vertex w : g_.neighbors(v)) {
        if (alive[w] && !matched[w]) {
          matched[v] = matched[w] = 1;
          ++size;
          break;
        }
      }
    }
    return size;
  }

  void branch(std::vector<char> alive, std::vector<char> cover, std::size_t size) {
    for (bool changed = true; changed;) {
      changed = false;
      for (Vertex v = 0; v < g_.order(); ++v) {
        if (!alive[v]) continue;
        const std::size_t d = live_degree(alive, v);
        if (d == 0) {
          alive[v] = 0;
          changed = true;
        } else if (d == 1) {
          const Vertex u = *std::find_if(g_.neighbors(v).begin(), g_.neighbors(v).end(),
                                         [&](Vertex w) { return alive[w] != 0; });
          cover[u] = 1;
          alive[u] = alive[v] = 0;
          ++size;
          changed = true;
        }
      }
    }
    if (size >= best_size_) return;

    Vertex pick = 0;
    std::size_t pick_degree = 0;
    for (Vertex v = 0; v < g_.order(); ++v) {
      if (!alive[v]) continue;
      const std::size_t d = live_degree(alive, v);
      if (d > pick_degree) {
        pick = v;
        pick_degree = d;
      }
    }
    if (pick_degree == 0) {
      best_size_ = size;
      best_cover_ = cover;
      return;
    }
    if (size + matching_bound(alive) >= best_size_) return;

    {
      auto a = alive;
      auto c = cover;
      a[pick] = 0;
      c[pick] = 1;
      branch(std::move(a), std::move(c), size + 1);
    }
    for (Vertex w : g_.neighbors(pick)) {
      if (alive[w]) {
        cover[w] = 1;
        alive[w] = 0;
      }
    }
    alive[pick] = 0;
    branch(std::move(alive), std::move(cover), size + pick_degree);
  }

  const Graph& g_;
  std::size_t best_size_;
  std::vector<char> best_cover_;
};

}  // namespace

StrongResolution sdim_f(const Graph& g) {
  require_connected_pairable(g, "sdim_f");
  return solve_covering(g.order(), pair_supports(g, SupportKind::strong));
}

StrongResolution sdim_f_reduced(const Graph& g) {
  require_connected_pairable(g, "sdim_f_reduced");
  const StrongResolvingGraph sr = strong_resolving_graph(g);
  std::vector<VertexSet> constraints;
  for (const auto& [u, v] : sr.base_edges()) constraints.push_back({u, v});
  return solve_covering(g.order(), std::move(constraints));
}

Rational sl_f(const Graph& g) {
  require_connected_pairable(g, "sl_f");
  return solve_covering(g.order(), pair_supports(g, SupportKind::local)).value;
}

std::size_t sdim(const Graph& g) {
  require_connected_pairable(g, "sdim");
  return vertex_cover_number(strong_resolving_graph(g).graph);
}

std::vector<Edge> maximum_matching(const Graph& g) {
  const std::size_t cap = size_limits().matching;
  if (g.order() > cap) {
    throw Error(ErrorCode::size_limit_exceeded, "matching is capped at " + std::to_string(cap) + " vertices");
  }
  return BlossomMatcher(g).run();
}

std::size_t max_matching(const Graph& g) { return maximum_matching(g).size(); }

VertexSet minimum_vertex_cover(const Graph& g) {
  const std::size_t cap = size_limits().vertex_cover;
  if (g.order() > cap) {
    throw Error(ErrorCode::size_limit_exceeded,
                "exact vertex cover is capped at " + std::to_string(cap) + " vertices");
  }
  return VertexCoverSolver(g).run();
}

std::size_t vertex_cover_number(const Graph& g) { return minimum_vertex_cover(g).size(); }

Rational max_weight_on_optimal_face(const Graph& g, Vertex v) {
  require_connected_pairable(g, "max_weight_on_optimal_face");
  if (v >= g.order()) throw Error(ErrorCode::invalid_vertex, "vertex out of range");
  const std::vector<VertexSet> supports = reduce_covering_constraints(pair_supports(g, SupportKind::strong));
  const Rational optimum = solve_covering(g.order(), supports).value;

  const std::size_t n = g.order();
  LinearProgram probe;
  probe.objective.assign(n, Rational());
  probe.objective[v] = 1;
  for (const auto& support : supports) {
    LinearConstraint row{std::vector<Rational>(n), Relation::greater_equal, 1};
    for (Vertex z : support) row.coefficients[z] = 1;
    probe.constraints.push_back(std::move(row));
  }
  probe.constraints.push_back(LinearConstraint{std::vector<Rational>(n, Rational(1)), Relation::equal, optimum});
  const LinearSolution solved = maximize(probe);
  if (solved.status != LpStatus::optimal) {
    throw Error(ErrorCode::invariant_violation, "optimal-face probe has no optimum");
  }
  return solved.value;
}

InvariantReport invariant_report(const Graph& g, ReportOptions options) {
  require_connected_pairable(g, "invariant_report");
  InvariantReport report;
  report.order = g.order();
  report.sr = strong_resolving_graph(g);
  report.boundary_size = report.sr.boundary.size();

  StrongResolution resolution = options.reduced_lp ? sdim_f_reduced(g) : sdim_f(g);
  report.sdim_f = resolution.value;
  report.witness = std::move(resolution.witness);

  const VertexSet cover = minimum_vertex_cover(report.sr.graph);
  report.sr_vertex_cover = cover.size();
  report.sdim = cover.size();
  report.sr_matching = max_matching(report.sr.graph);
  report.leaves = g.leaf_count();
  report.diameter = all_pairs_distances(g).diameter();
  report.sr_components = component_profile(report.sr.graph);

  auto violated = [](const std::string& what) {
    throw Error(ErrorCode::invariant_violation, what);
  };
  for (const auto& [u, v] : report.sr.graph.edges()) {
    if (!std::binary_search(cover.begin(), cover.end(), u) && !std::binary_search(cover.begin(), cover.end(), v)) {
      violated("vertex cover of G_SR misses an edge");
    }
  }
  const Rational nu(static_cast<long>(report.sr_matching));
  const Rational alpha(static_cast<long>(report.sdim));
  const Rational half_boundary = Rational(static_cast<long>(report.boundary_size), 2);
  if (report.sr_matching > report.sr_vertex_cover) violated("matching exceeds vertex cover");
  if (report.sdim_f < nu) violated("sdim_f below the matching number of G_SR");
  if (report.sdim_f > half_boundary) violated("sdim_f above |M(G)|/2");
  if (report.sdim_f > alpha) violated("sdim_f above sdim");
  if (report.sdim_f < Rational(1) || report.sdim_f < alpha / Rational(2)) violated("sdim_f below max(sdim/2, 1)");
  return report;
}

}  // namespace sdim
