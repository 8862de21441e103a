// Brute-force reference implementations. Deliberately naive and independent
// of the library algorithms they check.
#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <limits>
#include <numeric>
#include <optional>
#include <vector>

#include "sdimlab/families.hpp"
#include "sdimlab/graph.hpp"
#include "sdimlab/rational.hpp"

namespace oracle {

using sdim::Graph;
using sdim::Rational;
using sdim::Vertex;

constexpr int kInf = std::numeric_limits<int>::max() / 4;

inline std::vector<std::vector<int>> floyd_warshall(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<std::vector<int>> d(n, std::vector<int>(n, kInf));
  for (Vertex u = 0; u < n; ++u) {
    d[u][u] = 0;
    for (Vertex v : g.neighbors(u)) d[u][v] = 1;
  }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (d[i][k] + d[k][j] < d[i][j]) d[i][j] = d[i][k] + d[k][j];
  return d;
}

// Every shortest a-b path, listed explicitly by DFS over simple paths.
inline std::vector<std::vector<Vertex>> all_geodesics(const Graph& g, Vertex a, Vertex b) {
  const auto d = floyd_warshall(g);
  std::vector<std::vector<Vertex>> out;
  if (d[a][b] >= kInf) return out;
  std::vector<Vertex> path{a};
  std::vector<bool> used(g.order(), false);
  used[a] = true;
  std::function<void()> dfs = [&] {
    const Vertex last = path.back();
    if (last == b) {
      if (static_cast<int>(path.size()) - 1 == d[a][b]) out.push_back(path);
      return;
    }
    if (static_cast<int>(path.size()) - 1 >= d[a][b]) return;
    for (Vertex w : g.neighbors(last)) {
      if (used[w]) continue;
      used[w] = true;
      path.push_back(w);
      dfs();
      path.pop_back();
      used[w] = false;
    }
  };
  dfs();
  return out;
}

inline bool on_some_geodesic(const Graph& g, Vertex inner, Vertex a, Vertex b) {
  for (const auto& p : all_geodesics(g, a, b)) {
    if (std::find(p.begin(), p.end(), inner) != p.end()) return true;
  }
  return false;
}

// z with x on a y-z geodesic or y on an x-z geodesic.
inline std::vector<Vertex> s_set(const Graph& g, Vertex x, Vertex y) {
  std::vector<Vertex> out;
  for (Vertex z = 0; z < g.order(); ++z) {
    if (on_some_geodesic(g, x, y, z) || on_some_geodesic(g, y, x, z)) out.push_back(z);
  }
  return out;
}

// u maximally distant from v: no neighbour of u is farther from v.
inline bool mmd(const Graph& g, Vertex u, Vertex v) {
  const auto d = floyd_warshall(g);
  auto maximal = [&](Vertex a, Vertex b) {
    return std::all_of(g.neighbors(a).begin(), g.neighbors(a).end(), [&](Vertex w) { return d[w][b] <= d[a][b]; });
  };
  return u != v && maximal(u, v) && maximal(v, u);
}

inline bool connected_without(const Graph& g, Vertex removed) {
  std::vector<bool> seen(g.order(), false);
  seen[removed] = true;
  Vertex start = removed == 0 ? 1 : 0;
  std::vector<Vertex> stack{start};
  seen[start] = true;
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w : g.neighbors(v)) {
      if (!seen[w]) {
        seen[w] = true;
        stack.push_back(w);
      }
    }
  }
  return std::all_of(seen.begin(), seen.end(), [](bool s) { return s; });
}

inline std::vector<Vertex> cut_vertices(const Graph& g) {
  std::vector<Vertex> out;
  if (g.order() < 3) return out;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (!connected_without(g, v)) out.push_back(v);
  }
  return out;
}

inline std::size_t matching_number(const Graph& g) {
  const auto edges = g.edges();
  std::vector<bool> used(g.order(), false);
  std::size_t best = 0;
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t i, std::size_t size) {
    best = std::max(best, size);
    if (size + (edges.size() - i) <= best) return;
    for (std::size_t j = i; j < edges.size(); ++j) {
      const auto [u, v] = edges[j];
      if (used[u] || used[v]) continue;
      used[u] = used[v] = true;
      rec(j + 1, size + 1);
      used[u] = used[v] = false;
    }
  };
  rec(0, 0);
  return best;
}

inline std::size_t vertex_cover_number(const Graph& g) {
  const std::size_t n = g.order();
  std::size_t best = n;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    const auto size = static_cast<std::size_t>(std::popcount(mask));
    if (size >= best) continue;
    bool covers = true;
    for (const auto& [u, v] : g.edges()) {
      if (!(mask >> u & 1u) && !(mask >> v & 1u)) {
        covers = false;
        break;
      }
    }
    if (covers) best = size;
  }
  return best;
}

inline bool isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return false;
  std::vector<Vertex> perm(a.order());
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (const auto& [u, v] : a.edges()) {
      if (!b.adjacent(perm[u], perm[v])) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

inline bool hamiltonian(const Graph& g) {
  const std::size_t n = g.order();
  if (n < 3) return false;
  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) ok = g.adjacent(perm[i], perm[(i + 1) % n]);
    if (ok) return true;
  } while (std::next_permutation(perm.begin() + 1, perm.end()));
  return false;
}

// Solves A x = b for square A; nullopt when singular.
inline std::optional<std::vector<Rational>> solve_square(std::vector<std::vector<Rational>> a, std::vector<Rational> b) {
  const std::size_t n = a.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col].is_zero()) ++pivot;
    if (pivot == n) return std::nullopt;
    std::swap(a[pivot], a[col]);
    std::swap(b[pivot], b[col]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col].is_zero()) continue;
      const Rational f = a[r][col] / a[col][col];
      for (std::size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
      b[r] -= f * b[col];
    }
  }
  std::vector<Rational> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
  return x;
}

// min sum x  s.t.  sum_{i in S} x_i >= 1 for each S,  0 <= x <= 1,
// by enumerating every basic solution.
inline Rational covering_lp(std::size_t vars, const std::vector<std::vector<Vertex>>& sets) {
  struct Row {
    std::vector<Rational> a;
    Rational b;
  };
  std::vector<Row> rows;
  for (const auto& s : sets) {
    Row r{std::vector<Rational>(vars), Rational(1)};
    for (Vertex v : s) r.a[v] = 1;
    rows.push_back(r);
  }
  for (std::size_t i = 0; i < vars; ++i) {
    Row lo{std::vector<Rational>(vars), Rational(0)};
    lo.a[i] = 1;
    rows.push_back(lo);
    Row hi = lo;
    hi.b = 1;
    rows.push_back(hi);
  }
  auto feasible = [&](const std::vector<Rational>& x) {
    for (const auto& s : sets) {
      Rational sum;
      for (Vertex v : s) sum += x[v];
      if (sum < Rational(1)) return false;
    }
    return std::all_of(x.begin(), x.end(), [](const Rational& v) { return v.sign() >= 0 && v <= Rational(1); });
  };

  std::optional<Rational> best;
  std::vector<std::size_t> pick(vars);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t depth, std::size_t from) {
    if (depth == vars) {
      std::vector<std::vector<Rational>> a;
      std::vector<Rational> b;
      for (std::size_t i : pick) {
        a.push_back(rows[i].a);
        b.push_back(rows[i].b);
      }
      const auto x = solve_square(a, b);
      if (!x || !feasible(*x)) return;
      const Rational total = std::accumulate(x->begin(), x->end(), Rational());
      if (!best || total < *best) best = total;
      return;
    }
    for (std::size_t i = from; i < rows.size(); ++i) {
      pick[depth] = i;
      rec(depth + 1, i + 1);
    }
  };
  rec(0, 0);
  return *best;
}

inline Graph relabel(const Graph& g, const std::vector<Vertex>& perm) {
  std::vector<sdim::Edge> edges;
  for (const auto& [u, v] : g.edges()) edges.emplace_back(perm[u], perm[v]);
  return Graph::from_edges(g.order(), edges);
}

inline std::vector<Vertex> random_permutation(std::size_t n, sdim::SeededRng& rng) {
  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  for (std::size_t i = n; i > 1; --i) std::swap(perm[i - 1], perm[rng.below(i)]);
  return perm;
}

}  // namespace oracle
