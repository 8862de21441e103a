#include <doctest.h>

#include <cstdlib>

#include "oracles.hpp"
#include "sdimlab/error.hpp"
#include "sdimlab/families.hpp"
#include "sdimlab/invariants.hpp"
#include "sdimlab/products.hpp"
#include "sdimlab/resolving.hpp"

using namespace sdim;

namespace {

std::vector<VertexSet> oracle_supports(const Graph& g, bool local) {
  std::vector<VertexSet> out;
  for (Vertex x = 0; x < g.order(); ++x) {
    for (Vertex y = x + 1; y < g.order(); ++y) {
      VertexSet s = oracle::s_set(g, x, y);
      if (local) {
        std::erase_if(s, [&](Vertex z) { return z != x && z != y && !g.adjacent(z, x) && !g.adjacent(z, y); });
      }
      out.push_back(s);
    }
  }
  return out;
}

// Figure graph used for the disconnected K_1 corona example: a hexagon
// u1..u6 with chords u2u4, u4u6, u6u2, u2u5.
Graph hexagon_with_chords() {
  return build_graph(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}, {1, 3}, {3, 5}, {5, 1}, {1, 4}});
}

}  // namespace

TEST_CASE("sdim_f on small graphs agrees with basic-solution enumeration") {
  SeededRng rng(71);
  for (int i = 0; i < 40; ++i) {
    const Graph g = random_connected_graph(rng.between(2, 5), 50, rng);
    const StrongResolution r = sdim_f(g);
    CHECK(r.value == oracle::covering_lp(g.order(), oracle_supports(g, false)));
    CHECK(sl_f(g) == oracle::covering_lp(g.order(), oracle_supports(g, true)));
  }
}

TEST_CASE("sdim_f named values") {
  CHECK(sdim_f(path_graph(2)).value == Rational(1));
  CHECK(sdim_f(path_graph(9)).value == Rational(1));
  CHECK(sdim_f(petersen_graph()).value == Rational(5));
  CHECK(sdim_f(gq_full_graph(3)).value == Rational(5));
  CHECK(sdim_f_reduced(cycle_graph(7)).value == Rational(7, 2));
  CHECK(sdim_f_reduced(wheel_graph(4)).value == Rational(2));
  SeededRng rng(73);
  for (int i = 0; i < 20; ++i) {
    const Graph t = random_tree(rng.between(2, 14), rng);
    CHECK(sdim_f_reduced(t).value == Rational(static_cast<long>(t.leaf_count()), 2));
  }
}

TEST_CASE("witness is a minimum strong resolving function") {
  const Graph g = gq_full_graph(2);
  const StrongResolution r = sdim_f(g);
  CHECK(r.witness.total() == r.value);
  const DistanceMatrix d = all_pairs_distances(g);
  for (Vertex x = 0; x < g.order(); ++x) {
    for (Vertex y = x + 1; y < g.order(); ++y) CHECK(r.witness.sum_over(s_set(g, d, x, y).support) >= Rational(1));
  }
}

TEST_CASE("sl_f") {
  CHECK(sl_f(path_graph(3)) == Rational(1));
  CHECK(sl_f(path_graph(5)) == Rational(3, 2));
  CHECK(sl_f(path_graph(5)) >= sdim_f(path_graph(5)).value);
  for (const Graph& g : {petersen_graph(), wheel_graph(6), complete_multipartite_graph({2, 3}), house_graph()}) {
    CHECK(sl_f(g) == sdim_f(g).value);
  }
  try {
    sl_f(disjoint_union(path_graph(2), path_graph(2)));
    FAIL("expected DISCONNECTED_INPUT");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::disconnected_input);
  }
}

TEST_CASE("strong metric dimension") {
  for (std::size_t q = 1; q <= 4; ++q) CHECK(sdim::sdim(gq_full_graph(q)) == 2 * q + 2);
  for (std::size_t k = 1; k <= 5; ++k) CHECK(sdim::sdim(cycle_graph(2 * k + 1)) == k + 1);
  SeededRng rng(79);
  for (int i = 0; i < 20; ++i) {
    const Graph t = random_tree(rng.between(3, 14), rng);
    CHECK(sdim::sdim(t) == t.leaf_count() - 1);
  }
}

TEST_CASE("matching and vertex cover agree with brute force") {
  SeededRng rng(83);
  for (int i = 0; i < 200; ++i) {
    const Graph g = random_graph(rng.between(1, 12), static_cast<unsigned>(rng.between(10, 80)), rng);
    const std::size_t nu = max_matching(g);
    CHECK(nu == oracle::matching_number(g));
    const auto pairs = maximum_matching(g);
    CHECK(pairs.size() == nu);
    std::vector<bool> used(g.order(), false);
    for (const auto& [u, v] : pairs) {
      CHECK(g.adjacent(u, v));
      CHECK_FALSE(used[u]);
      CHECK_FALSE(used[v]);
      used[u] = used[v] = true;
    }
    const std::size_t alpha = vertex_cover_number(g);
    CHECK(alpha == oracle::vertex_cover_number(g));
    const VertexSet cover = minimum_vertex_cover(g);
    CHECK(cover.size() == alpha);
    for (const auto& [u, v] : g.edges()) {
      CHECK((std::binary_search(cover.begin(), cover.end(), u) || std::binary_search(cover.begin(), cover.end(), v)));
    }
    if (is_bipartite(g)) CHECK(alpha == nu);
  }
  CHECK(max_matching(cycle_graph(6)) == 3);
  CHECK(vertex_cover_number(complete_graph(7)) == 6);
  CHECK(vertex_cover_number(star_graph(9)) == 1);
  CHECK(max_matching(disjoint_union(complete_graph(10), star_graph(4))) == 6);
}

TEST_CASE("vertex cover size cap") {
  {
    setenv("SDIMLAB_SIZE_LIMIT", "6", 1);
    struct Restore {
      ~Restore() { unsetenv("SDIMLAB_SIZE_LIMIT"); }
    } restore;
    CHECK_THROWS_AS(vertex_cover_number(path_graph(7)), Error);
    CHECK_THROWS_AS(max_matching(path_graph(7)), Error);
    CHECK(vertex_cover_number(path_graph(6)) == 3);
  }
  CHECK(vertex_cover_number(path_graph(7)) == 3);
}

TEST_CASE("disconnected K_1 corona example") {
  const Graph h = disjoint_union(hexagon_with_chords(), complete_graph(1));
  const Graph g = corona(complete_graph(1), h).graph;
  const StrongResolvingGraph sr = strong_resolving_graph(g);
  CHECK(vertex_cover_number(sr.graph) == 3);
  CHECK(max_matching(sr.graph) == 3);
  CHECK(sdim::sdim(g) == 3);
  CHECK(sdim_f(g).value == Rational(3));
}

TEST_CASE("optimal face probe") {
  CHECK(max_weight_on_optimal_face(path_graph(2), 0) == Rational(1));
  CHECK(max_weight_on_optimal_face(star_graph(3), 0) == Rational(0));
  CHECK(max_weight_on_optimal_face(star_graph(3), 1) == Rational(1, 2));
  CHECK(max_weight_on_optimal_face(cycle_graph(5), 2) == Rational(1, 2));
  SeededRng rng(89);
  for (int i = 0; i < 20; ++i) {
    const Graph g = random_connected_graph(rng.between(3, 9), 35, rng);
    for (Vertex v : cut_vertices(g)) CHECK(max_weight_on_optimal_face(g, v) == Rational(0));
  }
}

TEST_CASE("invariant report") {
  SUBCASE("G_4 gadget") {
    const InvariantReport r = invariant_report(gq_full_graph(4));
    CHECK(r.order == 26);
    CHECK(r.boundary_size == 15);
    CHECK(r.sdim == 10);
    CHECK(r.sdim_f == Rational(6));
    CHECK(r.sr_matching == 6);
    CHECK(r.sr_vertex_cover == 10);
    CHECK(r.leaves == 10);
    CHECK(r.sr_components.size() == 2);
  }
  SUBCASE("C_6") {
    const InvariantReport r = invariant_report(cycle_graph(6));
    CHECK(r.boundary_size == 6);
    CHECK(r.sdim == 3);
    CHECK(r.sdim_f == Rational(3));
  }
  SUBCASE("P_7") {
    const InvariantReport r = invariant_report(path_graph(7));
    CHECK(r.boundary_size == 2);
    CHECK(r.sdim == 1);
    CHECK(r.sdim_f == Rational(1));
    CHECK(r.diameter == 6);
  }
  SUBCASE("reduced LP option gives the same value") {
    CHECK(invariant_report(petersen_graph(), {true}).sdim_f == Rational(5));
  }
  SUBCASE("preconditions") {
    CHECK_THROWS_AS(invariant_report(complete_graph(1)), Error);
    CHECK_THROWS_AS(invariant_report(empty_graph(3)), Error);
  }
}
