#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "sdimlab/graph.hpp"
#include "sdimlab/lp.hpp"
#include "sdimlab/rational.hpp"
#include "sdimlab/resolving.hpp"

namespace sdim {

struct StrongResolution {
  Rational value;
  WeightFunction witness;  // a minimum strong resolving function
};

/// Fractional strong metric dimension from the LP over every pair's S{x,y}.
/// g must be connected with at least two vertices.
StrongResolution sdim_f(const Graph& g);

/// The same optimum restricted to MMD-pair constraints, i.e. the fractional
/// vertex cover number of G_SR lifted to V(G).
StrongResolution sdim_f_reduced(const Graph& g);

/// Minimum weight of a strong locating function (SL{x,y} supports).
Rational sl_f(const Graph& g);

/// Strong metric dimension: vertex cover number of G_SR.
std::size_t sdim(const Graph& g);

/// Maximum matching size of an arbitrary simple graph (Edmonds' blossom).
std::size_t max_matching(const Graph& g);
/// The matched pairs realizing max_matching.
std::vector<Edge> maximum_matching(const Graph& g);

/// Exact minimum vertex cover size (kernelized branch and bound).
std::size_t vertex_cover_number(const Graph& g);
/// A minimum vertex cover.
VertexSet minimum_vertex_cover(const Graph& g);

/// max g(v) over all minimum strong resolving functions g of g.
Rational max_weight_on_optimal_face(const Graph& g, Vertex v);

struct InvariantReport {
  std::size_t order = 0;
  std::size_t boundary_size = 0;  // |M(G)|
  Rational sdim_f;
  std::size_t sdim = 0;
  std::size_t sr_matching = 0;     // ν(G_SR)
  std::size_t sr_vertex_cover = 0; // α(G_SR)
  std::size_t leaves = 0;          // σ(G)
  std::size_t diameter = 0;
  std::vector<ComponentProfile> sr_components;
  StrongResolvingGraph sr;
  WeightFunction witness;
};

struct ReportOptions {
  /// Use the MMD-pair LP instead of the full-pair LP for sdim_f.
  bool reduced_lp = false;
};

/// Computes every field and checks
///   ν(G_SR) <= sdim_f <= min(|M|/2, sdim),  sdim = α(G_SR),
///   sdim_f >= max(sdim/2, 1);
/// throws INVARIANT_VIOLATION if any fails.
InvariantReport invariant_report(const Graph& g, ReportOptions options = {});

}  // namespace sdim
