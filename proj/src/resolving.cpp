#include "sdimlab/resolving.hpp"

#include <algorithm>
#include <string>

#include <json.hpp>

#include "sdimlab/error.hpp"

namespace sdim {

namespace {

void check_pair(const DistanceMatrix& d, Vertex x, Vertex y) {
  if (x >= d.order() || y >= d.order()) throw Error(ErrorCode::invalid_vertex, "vertex out of range");
  if (x == y) throw Error(ErrorCode::same_vertex, "pair (" + std::to_string(x) + ", " + std::to_string(y) + ")");
  if (!d.reachable(x, y)) {
    throw Error(ErrorCode::different_components,
                "vertices " + std::to_string(x) + " and " + std::to_string(y) + " are not connected");
  }
}

}  // namespace

PairConstraint s_set(const Graph& g, const DistanceMatrix& d, Vertex x, Vertex y) {
  check_pair(d, x, y);
  PairConstraint c{x, y, {}, SupportKind::strong};
  const std::uint32_t dxy = d.at(x, y);
  for (Vertex z = 0; z < g.order(); ++z) {
    if (!d.reachable(x, z)) continue;
    const std::uint32_t dxz = d.at(x, z);
    const std::uint32_t dyz = d.at(y, z);
    if (dxy + dxz == dyz || dxy + dyz == dxz) c.support.push_back(z);
  }
  return c;
}

PairConstraint sl_set(const Graph& g, const DistanceMatrix& d, Vertex x, Vertex y) {
  PairConstraint c = s_set(g, d, x, y);
  c.kind = SupportKind::local;
  std::erase_if(c.support, [&](Vertex z) {
    return z != x && z != y && !g.adjacent(x, z) && !g.adjacent(y, z);
  });
  return c;
}

bool is_mmd(const Graph& g, const DistanceMatrix& d, Vertex u, Vertex v) {
  check_pair(d, u, v);
  const std::uint32_t duv = d.at(u, v);
  for (Vertex w : g.neighbors(u)) {
    if (d.at(w, v) > duv) return false;
  }
  for (Vertex w : g.neighbors(v)) {
    if (d.at(w, u) > duv) return false;
  }
  return true;
}

std::vector<Edge> StrongResolvingGraph::base_edges() const {
  std::vector<Edge> out;
  for (const auto& [u, v] : graph.edges()) out.emplace_back(boundary[u], boundary[v]);
  return out;
}

std::string StrongResolvingGraph::to_json() const {
  nlohmann::json doc;
  doc["boundary"] = boundary;
  nlohmann::json edges = nlohmann::json::array();
  for (const auto& [u, v] : base_edges()) edges.push_back({u, v});
  doc["edges"] = std::move(edges);
  return doc.dump();
}

StrongResolvingGraph strong_resolving_graph(const Graph& g) {
  if (g.order() < 2) throw Error(ErrorCode::invalid_params, "strong resolving graph needs at least two vertices");
  if (!is_connected(g)) throw Error(ErrorCode::disconnected_input, "strong resolving graph needs a connected graph");

  const DistanceMatrix d = all_pairs_distances(g);
  std::vector<Edge> pairs;
  std::vector<bool> in_boundary(g.order(), false);
  for (Vertex u = 0; u < g.order(); ++u) {
    for (Vertex v = u + 1; v < g.order(); ++v) {
      if (is_mmd(g, d, u, v)) {
        pairs.emplace_back(u, v);
        in_boundary[u] = in_boundary[v] = true;
      }
    }
  }

  StrongResolvingGraph sr;
  std::vector<Vertex> local(g.order(), 0);
  std::vector<std::string> labels;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (!in_boundary[v]) continue;
    local[v] = static_cast<Vertex>(sr.boundary.size());
    sr.boundary.push_back(v);
    if (g.has_labels()) labels.push_back(g.label(v));
  }
  for (auto& [u, v] : pairs) {
    u = local[u];
    v = local[v];
  }
  sr.graph = Graph::from_edges(sr.boundary.size(), pairs, std::move(labels));
  return sr;
}

Graph star_closure(const Graph& h) {
  const DistanceMatrix d = all_pairs_distances(h);
  std::vector<Edge> edges;
  for (Vertex x = 0; x < h.order(); ++x) {
    for (Vertex y = x + 1; y < h.order(); ++y) {
      const auto dxy = d.distance(x, y);
      if (!dxy || *dxy >= 2 || true_twins(h, x, y)) edges.emplace_back(x, y);
    }
  }
  return Graph::from_edges(h.order(), edges, h.labels());
}

Graph drop_isolated(const Graph& h) {
  VertexSet keep;
  for (Vertex v = 0; v < h.order(); ++v) {
    if (h.degree(v) > 0) keep.push_back(v);
  }
  return induced_subgraph(h, keep);
}

}  // namespace sdim
