#include "sdimlab/products.hpp"

#include <string>

#include "sdimlab/error.hpp"

namespace sdim {

std::size_t ProductVertexMap::product_order() const {
  if (kind == ProductKind::corona) return left_order + left_order * right_order;
  return left_order * right_order;
}

Vertex ProductVertexMap::pair_id(Vertex u, Vertex w) const {
  if (kind == ProductKind::corona) return copy_id(u, w);
  return static_cast<Vertex>(u * right_order + w);
}

std::pair<Vertex, Vertex> ProductVertexMap::coordinates(Vertex id) const {
  if (kind == ProductKind::corona) {
    if (is_base(id)) throw Error(ErrorCode::invalid_vertex, "corona base vertex has no pair coordinates");
    const std::size_t offset = id - left_order;
    return {static_cast<Vertex>(offset / right_order), static_cast<Vertex>(offset % right_order)};
  }
  return {static_cast<Vertex>(id / right_order), static_cast<Vertex>(id % right_order)};
}

bool ProductVertexMap::is_base(Vertex id) const { return kind == ProductKind::corona && id < left_order; }

Vertex ProductVertexMap::copy_id(Vertex u, Vertex w) const {
  return static_cast<Vertex>(left_order + u * right_order + w);
}

namespace {

template <typename Adjacent>
Product pair_product(ProductKind kind, const Graph& g, const Graph& h, Adjacent adjacent) {
  ProductVertexMap map{kind, g.order(), h.order()};
  std::vector<Edge> edges;
  std::vector<std::string> labels;
  const std::size_t total = map.product_order();
  labels.reserve(total);
  for (Vertex id = 0; id < total; ++id) {
    const auto [u, w] = map.coordinates(id);
    labels.push_back("(" + g.label(u) + "," + h.label(w) + ")");
    for (Vertex other = id + 1; other < total; ++other) {
      const auto [u2, w2] = map.coordinates(other);
      if (adjacent(u, w, u2, w2)) edges.emplace_back(id, other);
    }
  }
  return {Graph::from_edges(total, edges, std::move(labels)), map};
}

}  // namespace

Product corona(const Graph& g, const Graph& h) {
  ProductVertexMap map{ProductKind::corona, g.order(), h.order()};
  std::vector<Edge> edges = g.edges();
  std::vector<std::string> labels;
  for (Vertex u = 0; u < g.order(); ++u) labels.push_back(g.label(u));
  for (Vertex u = 0; u < g.order(); ++u) {
    for (Vertex w = 0; w < h.order(); ++w) {
      edges.emplace_back(u, map.copy_id(u, w));
      labels.push_back(g.label(u) + ":" + h.label(w));
    }
    for (const auto& [a, b] : h.edges()) edges.emplace_back(map.copy_id(u, a), map.copy_id(u, b));
  }
  return {Graph::from_edges(map.product_order(), edges, std::move(labels)), map};
}

Product lexicographic(const Graph& g, const Graph& h) {
  return pair_product(ProductKind::lexicographic, g, h, [&](Vertex u, Vertex w, Vertex u2, Vertex w2) {
    return g.adjacent(u, u2) || (u == u2 && h.adjacent(w, w2));
  });
}

Product cartesian(const Graph& g, const Graph& h) {
  return pair_product(ProductKind::cartesian, g, h, [&](Vertex u, Vertex w, Vertex u2, Vertex w2) {
    return (u == u2 && h.adjacent(w, w2)) || (w == w2 && g.adjacent(u, u2));
  });
}

Product direct(const Graph& g, const Graph& h) {
  return pair_product(ProductKind::direct, g, h, [&](Vertex u, Vertex w, Vertex u2, Vertex w2) {
    return g.adjacent(u, u2) && h.adjacent(w, w2);
  });
}

Product make_product(ProductKind kind, const Graph& g, const Graph& h) {
  switch (kind) {
    case ProductKind::corona: return corona(g, h);
    case ProductKind::lexicographic: return lexicographic(g, h);
    case ProductKind::cartesian: return cartesian(g, h);
    case ProductKind::direct: return direct(g, h);
  }
  throw Error(ErrorCode::invalid_params, "unknown product kind");
}

}  // namespace sdim
