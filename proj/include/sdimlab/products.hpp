#pragma once

#include <cstddef>
#include <utility>

#include "sdimlab/graph.hpp"

namespace sdim {

enum class ProductKind { corona, lexicographic, cartesian, direct };

/// Vertex indexing of a product graph.
///
/// For lexicographic, Cartesian and direct products the pair (u, w) has id
/// u * right_order + w (row-major). For the corona G ⊙ H the vertices of G
/// keep ids 0..n-1 and vertex w of the copy attached to u has id
/// n + u * m + w.
struct ProductVertexMap {
  ProductKind kind = ProductKind::cartesian;
  std::size_t left_order = 0;
  std::size_t right_order = 0;

  std::size_t product_order() const;

  Vertex pair_id(Vertex u, Vertex w) const;
  std::pair<Vertex, Vertex> coordinates(Vertex id) const;

  /// Corona only: whether id is a vertex of the G copy.
  bool is_base(Vertex id) const;
  /// Corona only: id of vertex w in the H copy attached to u.
  Vertex copy_id(Vertex u, Vertex w) const;
};

struct Product {
  Graph graph;
  ProductVertexMap map;
};

Product corona(const Graph& g, const Graph& h);
Product lexicographic(const Graph& g, const Graph& h);
Product cartesian(const Graph& g, const Graph& h);
Product direct(const Graph& g, const Graph& h);

Product make_product(ProductKind kind, const Graph& g, const Graph& h);

}  // namespace sdim
