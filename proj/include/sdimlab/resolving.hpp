#pragma once

#include <string>
#include <vector>

#include "sdimlab/distance.hpp"
#include "sdimlab/graph.hpp"

namespace sdim {

enum class SupportKind { strong, local };

/// A pair {x, y} with the vertex set that must carry total weight >= 1:
/// S{x,y} (kind strong) or SL{x,y} (kind local).
struct PairConstraint {
  Vertex x = 0;
  Vertex y = 0;
  VertexSet support;
  SupportKind kind = SupportKind::strong;
};

/// z such that x lies on a y-z geodesic or y lies on an x-z geodesic.
PairConstraint s_set(const Graph& g, const DistanceMatrix& d, Vertex x, Vertex y);

/// s_set intersected with N[x] ∪ N[y].
PairConstraint sl_set(const Graph& g, const DistanceMatrix& d, Vertex x, Vertex y);

/// u and v are mutually maximally distant.
bool is_mmd(const Graph& g, const DistanceMatrix& d, Vertex u, Vertex v);

/// The graph of MMD pairs restricted to the boundary M(G).
struct StrongResolvingGraph {
  VertexSet boundary;  // base ids, sorted
  Graph graph;         // vertex i corresponds to boundary[i]

  Vertex base_id(Vertex local) const { return boundary[local]; }
  /// MMD pairs as base ids (u < v).
  std::vector<Edge> base_edges() const;
  /// {"boundary": [...], "edges": [[u, v], ...]} in base ids.
  std::string to_json() const;
};

/// Throws DISCONNECTED_INPUT for disconnected g and INVALID_PARAMS for n < 2.
StrongResolvingGraph strong_resolving_graph(const Graph& g);

/// H*: xy is an edge iff d_H(x, y) >= 2 (or unreachable) or x, y are true twins.
Graph star_closure(const Graph& h);

/// H_-: the subgraph induced by the non-isolated vertices.
Graph drop_isolated(const Graph& h);

}  // namespace sdim
