#include "sdimlab/isomorphism.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "sdimlab/error.hpp"
#include "sdimlab/limits.hpp"

namespace sdim {

namespace {

using Coloring = std::vector<int>;

struct Pair {
  const Graph& a;
  const Graph& b;
};

std::size_t distinct_colors(const Coloring& c) {
  Coloring sorted = c;
  std::sort(sorted.begin(), sorted.end());
  return static_cast<std::size_t>(std::unique(sorted.begin(), sorted.end()) - sorted.begin());
}

// Refines both colorings with one shared signature table so that equal
// colors mean the same thing in a and b. Returns false as soon as the color
// histograms differ.
bool refine(const Pair& p, Coloring& ca, Coloring& cb) {
  std::size_t classes = distinct_colors(ca);
  while (true) {
    std::map<std::vector<int>, int> table;
    auto signature = [](const Graph& g, const Coloring& c, Vertex v) {
      std::vector<int> sig;
      sig.reserve(g.degree(v) + 1);
      sig.push_back(c[v]);
      for (Vertex w : g.neighbors(v)) sig.push_back(c[w]);
      std::sort(sig.begin() + 1, sig.end());
      return sig;
    };
    std::vector<std::vector<int>> sa(ca.size()), sb(cb.size());
    for (Vertex v = 0; v < ca.size(); ++v) table.emplace(sa[v] = signature(p.a, ca, v), 0);
    for (Vertex v = 0; v < cb.size(); ++v) table.emplace(sb[v] = signature(p.b, cb, v), 0);
    int next = 0;
    for (auto& entry : table) entry.second = next++;

    std::vector<int> count(table.size(), 0);
    for (Vertex v = 0; v < ca.size(); ++v) ++count[ca[v] = table[sa[v]]];
    for (Vertex v = 0; v < cb.size(); ++v) --count[cb[v] = table[sb[v]]];
    if (std::any_of(count.begin(), count.end(), [](int c) { return c != 0; })) return false;

    const std::size_t refined = distinct_colors(ca);
    if (refined == classes) return true;
    classes = refined;
  }
}

bool is_mapping_isomorphism(const Pair& p, const std::vector<Vertex>& map) {
  for (const auto& [u, v] : p.a.edges()) {
    if (!p.b.adjacent(map[u], map[v])) return false;
  }
  return p.a.size() == p.b.size();
}

std::optional<std::vector<Vertex>> search(const Pair& p, Coloring ca, Coloring cb) {
  if (!refine(p, ca, cb)) return std::nullopt;
  const std::size_t n = ca.size();

  std::map<int, std::size_t> class_size;
  for (int c : ca) ++class_size[c];
  int target = -1;
  std::size_t best = n + 1;
  for (const auto& [color, size] : class_size) {
    if (size > 1 && size < best) {
      best = size;
      target = color;
    }
  }

  if (target < 0) {
    std::vector<Vertex> map(n);
    std::vector<Vertex> by_color(n);
    for (Vertex w = 0; w < n; ++w) by_color[static_cast<std::size_t>(cb[w])] = w;
    for (Vertex v = 0; v < n; ++v) map[v] = by_color[static_cast<std::size_t>(ca[v])];
    if (is_mapping_isomorphism(p, map)) return map;
    return std::nullopt;
  }

  const auto v = static_cast<Vertex>(std::find(ca.begin(), ca.end(), target) - ca.begin());
  const int fresh = static_cast<int>(n) + 1;
  for (Vertex w = 0; w < n; ++w) {
    if (cb[w] != target) continue;
    Coloring na = ca, nb = cb;
    na[v] = fresh;
    nb[w] = fresh;
    if (auto found = search(p, std::move(na), std::move(nb))) return found;
  }
  return std::nullopt;
}

}  // namespace

std::optional<std::vector<Vertex>> find_isomorphism(const Graph& a, const Graph& b) {
  const std::size_t cap = size_limits().isomorphism;
  if (a.order() > cap || b.order() > cap) {
    throw Error(ErrorCode::size_limit_exceeded,
                "isomorphism test is capped at " + std::to_string(cap) + " vertices");
  }
  if (a.order() != b.order() || a.size() != b.size()) return std::nullopt;
  if (a.order() == 0) return std::vector<Vertex>{};

  Coloring ca(a.order()), cb(b.order());
  for (Vertex v = 0; v < a.order(); ++v) ca[v] = static_cast<int>(a.degree(v));
  for (Vertex v = 0; v < b.order(); ++v) cb[v] = static_cast<int>(b.degree(v));
  return search(Pair{a, b}, std::move(ca), std::move(cb));
}

bool is_isomorphic(const Graph& a, const Graph& b) { return find_isomorphism(a, b).has_value(); }

}  // namespace sdim
