#include "sdimlab/graph.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <queue>
#include <string>

#include "sdimlab/error.hpp"

namespace sdim {

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges,
                        std::vector<std::string> labels) {
  if (!labels.empty() && labels.size() != n) {
    throw Error(ErrorCode::invalid_params, "label count " + std::to_string(labels.size()) +
                                               " does not match vertex count " + std::to_string(n));
  }
  Graph g;
  g.adjacency_.assign(n, {});
  for (const auto& [u, v] : edges) {
    if (u >= n || v >= n) {
      throw Error(ErrorCode::invalid_vertex, "edge (" + std::to_string(u) + ", " +
                                                 std::to_string(v) + ") has an id outside 0.." +
                                                 std::to_string(n == 0 ? 0 : n - 1));
    }
    if (u == v) {
      throw Error(ErrorCode::self_loop,
                  "edge (" + std::to_string(u) + ", " + std::to_string(v) + ") is a loop");
    }
    g.adjacency_[u].push_back(v);
    g.adjacency_[v].push_back(u);
  }
  std::size_t degree_sum = 0;
  for (auto& list : g.adjacency_) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
    degree_sum += list.size();
  }
  g.edge_count_ = degree_sum / 2;
  g.labels_ = std::move(labels);
  return g;
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  const auto& list = adjacency_[u];
  return std::binary_search(list.begin(), list.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < order(); ++u) {
    for (Vertex v : adjacency_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

std::size_t Graph::max_degree() const {
  std::size_t best = 0;
  for (const auto& list : adjacency_) best = std::max(best, list.size());
  return best;
}

std::size_t Graph::min_degree() const {
  if (adjacency_.empty()) return 0;
  std::size_t best = adjacency_.front().size();
  for (const auto& list : adjacency_) best = std::min(best, list.size());
  return best;
}

std::size_t Graph::leaf_count() const {
  return static_cast<std::size_t>(std::count_if(adjacency_.begin(), adjacency_.end(),
                                                [](const auto& list) { return list.size() == 1; }));
}

std::string Graph::label(Vertex v) const {
  return labels_.empty() ? std::to_string(v) : labels_[v];
}

Graph Graph::with_labels(std::vector<std::string> labels) const {
  if (!labels.empty() && labels.size() != order()) {
    throw Error(ErrorCode::invalid_params, "label count does not match vertex count");
  }
  Graph copy = *this;
  copy.labels_ = std::move(labels);
  return copy;
}

Graph build_graph(std::size_t n, std::span<const Edge> edges) { return Graph::from_edges(n, edges); }

Graph complement(const Graph& g) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < g.order(); ++u) {
    for (Vertex v = u + 1; v < g.order(); ++v) {
      if (!g.adjacent(u, v)) edges.emplace_back(u, v);
    }
  }
  return Graph::from_edges(g.order(), edges, g.labels());
}

Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices) {
  std::vector<std::int64_t> local(g.order(), -1);
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (vertices[i] >= g.order()) throw Error(ErrorCode::invalid_vertex, "vertex out of range");
    local[vertices[i]] = static_cast<std::int64_t>(i);
  }
  std::vector<Edge> edges;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (Vertex w : g.neighbors(vertices[i])) {
      if (local[w] > static_cast<std::int64_t>(i)) {
        edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(local[w]));
      }
    }
    if (g.has_labels()) labels.push_back(g.label(vertices[i]));
  }
  return Graph::from_edges(vertices.size(), edges, std::move(labels));
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  std::vector<Edge> edges = a.edges();
  const auto shift = static_cast<Vertex>(a.order());
  for (const auto& [u, v] : b.edges()) edges.emplace_back(u + shift, v + shift);
  std::vector<std::string> labels;
  if (a.has_labels() || b.has_labels()) {
    for (Vertex v = 0; v < a.order(); ++v) labels.push_back(a.label(v));
    for (Vertex v = 0; v < b.order(); ++v) labels.push_back(b.label(v));
  }
  return Graph::from_edges(a.order() + b.order(), edges, std::move(labels));
}

std::vector<VertexSet> connected_components(const Graph& g) {
  std::vector<VertexSet> components;
  std::vector<bool> seen(g.order(), false);
  for (Vertex s = 0; s < g.order(); ++s) {
    if (seen[s]) continue;
    VertexSet component{s};
    seen[s] = true;
    for (std::size_t head = 0; head < component.size(); ++head) {
      for (Vertex w : g.neighbors(component[head])) {
        if (!seen[w]) {
          seen[w] = true;
          component.push_back(w);
        }
      }
    }
    std::sort(component.begin(), component.end());
    components.push_back(std::move(component));
  }
  return components;
}

bool is_connected(const Graph& g) { return connected_components(g).size() <= 1; }

VertexSet cut_vertices(const Graph& g) {
  if (!is_connected(g)) throw Error(ErrorCode::disconnected_input, "cut_vertices needs a connected graph");
  const std::size_t n = g.order();
  std::vector<std::size_t> disc(n, 0), low(n, 0);
  std::vector<bool> is_cut(n, false);
  std::size_t timer = 0;

  std::function<void(Vertex, std::int64_t)> dfs = [&](Vertex v, std::int64_t parent) {
    disc[v] = low[v] = ++timer;
    std::size_t children = 0;
    for (Vertex w : g.neighbors(v)) {
      if (static_cast<std::int64_t>(w) == parent) continue;
      if (disc[w] != 0) {
        low[v] = std::min(low[v], disc[w]);
        continue;
      }
      ++children;
      dfs(w, v);
      low[v] = std::min(low[v], low[w]);
      if (parent >= 0 && low[w] >= disc[v]) is_cut[v] = true;
    }
    if (parent < 0 && children > 1) is_cut[v] = true;
  };
  if (n > 0) dfs(0, -1);

  VertexSet out;
  for (Vertex v = 0; v < n; ++v) {
    if (is_cut[v]) out.push_back(v);
  }
  return out;
}

namespace {

std::vector<int> two_coloring(const Graph& g, bool& ok) {
  std::vector<int> color(g.order(), -1);
  ok = true;
  for (Vertex s = 0; s < g.order(); ++s) {
    if (color[s] >= 0) continue;
    color[s] = 0;
    std::queue<Vertex> queue;
    queue.push(s);
    while (!queue.empty()) {
      const Vertex v = queue.front();
      queue.pop();
      for (Vertex w : g.neighbors(v)) {
        if (color[w] < 0) {
          color[w] = 1 - color[v];
          queue.push(w);
        } else if (color[w] == color[v]) {
          ok = false;
        }
      }
    }
  }
  return color;
}

VertexSet closed_neighborhood(const Graph& g, Vertex v) {
  VertexSet out(g.neighbors(v).begin(), g.neighbors(v).end());
  out.insert(std::lower_bound(out.begin(), out.end(), v), v);
  return out;
}

}  // namespace

bool is_bipartite(const Graph& g) {
  bool ok = true;
  two_coloring(g, ok);
  return ok;
}

bool true_twins(const Graph& g, Vertex u, Vertex v) {
  return u != v && closed_neighborhood(g, u) == closed_neighborhood(g, v);
}

bool false_twins(const Graph& g, Vertex u, Vertex v) {
  return u != v && std::ranges::equal(g.neighbors(u), g.neighbors(v));
}

TwinPartition twin_partition(const Graph& g) {
  std::map<VertexSet, VertexSet> by_closed;
  std::map<VertexSet, VertexSet> by_open;
  for (Vertex v = 0; v < g.order(); ++v) {
    by_closed[closed_neighborhood(g, v)].push_back(v);
    by_open[VertexSet(g.neighbors(v).begin(), g.neighbors(v).end())].push_back(v);
  }

  std::vector<std::pair<VertexSet, TwinClass>> classes;
  std::vector<bool> placed(g.order(), false);
  for (auto& [key, members] : by_closed) {
    if (members.size() < 2) continue;
    for (Vertex v : members) placed[v] = true;
    classes.emplace_back(members, TwinClass::true_twin_clique);
  }
  for (auto& [key, members] : by_open) {
    if (members.size() < 2) continue;
    for (Vertex v : members) placed[v] = true;
    classes.emplace_back(members, TwinClass::false_twin_independent);
  }
  for (Vertex v = 0; v < g.order(); ++v) {
    if (!placed[v]) classes.emplace_back(VertexSet{v}, TwinClass::singleton);
  }
  std::sort(classes.begin(), classes.end(),
            [](const auto& a, const auto& b) { return a.first.front() < b.first.front(); });

  TwinPartition partition;
  for (auto& [members, type] : classes) {
    switch (type) {
      case TwinClass::singleton: partition.m1 += members.size(); break;
      case TwinClass::true_twin_clique: partition.m2 += members.size(); break;
      case TwinClass::false_twin_independent: partition.m3 += members.size(); break;
    }
    partition.classes.push_back(std::move(members));
    partition.class_type.push_back(type);
  }
  return partition;
}

std::vector<ComponentProfile> component_profile(const Graph& g) {
  bool ignored = true;
  const std::vector<int> color = two_coloring(g, ignored);
  std::vector<ComponentProfile> out;
  for (auto& component : connected_components(g)) {
    ComponentProfile profile;
    profile.order = component.size();
    const std::size_t d0 = g.degree(component.front());
    profile.is_regular = std::all_of(component.begin(), component.end(),
                                     [&](Vertex v) { return g.degree(v) == d0; });
    if (profile.is_regular) profile.regular_degree = d0;
    profile.is_bipartite = std::all_of(component.begin(), component.end(), [&](Vertex v) {
      return std::none_of(g.neighbors(v).begin(), g.neighbors(v).end(),
                          [&](Vertex w) { return color[w] == color[v]; });
    });
    profile.vertices = std::move(component);
    out.push_back(std::move(profile));
  }
  return out;
}

}  // namespace sdim
