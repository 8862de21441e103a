#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace sdim {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;
using VertexSet = std::vector<Vertex>;  // kept sorted ascending

/// Immutable simple undirected graph on dense ids 0..n-1.
///
/// Adjacency lists are sorted and symmetric; there are no loops or parallel
/// edges. Display labels are an overlay and never take part in equality or
/// in any algorithm.
class Graph {
 public:
  Graph() = default;

  /// Validates and normalizes an edge list. Duplicate edges (in either
  /// orientation) collapse; out-of-range ids and loops throw.
  static Graph from_edges(std::size_t n, std::span<const Edge> edges,
                          std::vector<std::string> labels = {});

  std::size_t order() const noexcept { return adjacency_.size(); }
  std::size_t size() const noexcept { return edge_count_; }

  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_[v]; }
  std::size_t degree(Vertex v) const { return adjacency_[v].size(); }
  bool adjacent(Vertex u, Vertex v) const;

  /// Edges as (u, v) with u < v, lexicographically sorted.
  std::vector<Edge> edges() const;

  std::size_t max_degree() const;
  std::size_t min_degree() const;
  /// Number of degree-1 vertices.
  std::size_t leaf_count() const;

  bool has_labels() const noexcept { return !labels_.empty(); }
  /// Display name of v: its label when present, else the decimal id.
  std::string label(Vertex v) const;
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  Graph with_labels(std::vector<std::string> labels) const;

  /// Structural equality (labels ignored).
  friend bool operator==(const Graph& a, const Graph& b) { return a.adjacency_ == b.adjacency_; }

 private:
  std::vector<std::vector<Vertex>> adjacency_;
  std::vector<std::string> labels_;
  std::size_t edge_count_ = 0;
};

/// Convenience wrapper for Graph::from_edges.
Graph build_graph(std::size_t n, std::span<const Edge> edges);
inline Graph build_graph(std::size_t n, std::initializer_list<Edge> edges) {
  return build_graph(n, std::span<const Edge>(edges.begin(), edges.size()));
}

Graph complement(const Graph& g);

/// Induced subgraph on `vertices` (sorted, distinct). Vertex i of the result
/// is vertices[i]; labels carry over.
Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices);

/// a followed by b, b's ids shifted by a.order().
Graph disjoint_union(const Graph& a, const Graph& b);

/// Components, each sorted, ordered by smallest member.
std::vector<VertexSet> connected_components(const Graph& g);
bool is_connected(const Graph& g);

/// Articulation points of a connected graph. Throws DISCONNECTED_INPUT.
VertexSet cut_vertices(const Graph& g);

bool is_bipartite(const Graph& g);

/// N[u] == N[v].
bool true_twins(const Graph& g, Vertex u, Vertex v);
/// N(u) == N(v), u != v.
bool false_twins(const Graph& g, Vertex u, Vertex v);

enum class TwinClass { singleton, true_twin_clique, false_twin_independent };

/// Classes of the relation u ~ v iff u = v, N[u] = N[v] or N(u) = N(v).
struct TwinPartition {
  std::vector<VertexSet> classes;
  std::vector<TwinClass> class_type;
  std::size_t m1 = 0;  // vertices in singleton classes
  std::size_t m2 = 0;  // vertices in true-twin cliques
  std::size_t m3 = 0;  // vertices in false-twin independent sets
};

TwinPartition twin_partition(const Graph& g);

struct ComponentProfile {
  VertexSet vertices;
  std::size_t order = 0;
  bool is_regular = false;
  std::optional<std::size_t> regular_degree;
  bool is_bipartite = false;
};

std::vector<ComponentProfile> component_profile(const Graph& g);

}  // namespace sdim
