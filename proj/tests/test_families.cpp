#include <doctest.h>

#include "oracles.hpp"
#include "sdimlab/error.hpp"
#include "sdimlab/families.hpp"
#include "sdimlab/isomorphism.hpp"
#include "sdimlab/resolving.hpp"

using namespace sdim;

namespace {

std::size_t girth(const Graph& g) {
  const auto d = oracle::floyd_warshall(g);
  std::size_t best = 0;
  for (const auto& [u, v] : g.edges()) {
    // shortest cycle through edge uv: a u-v path avoiding that edge
    std::vector<Edge> rest;
    for (const auto& e : g.edges()) {
      if (e != Edge{u, v}) rest.push_back(e);
    }
    const auto dr = oracle::floyd_warshall(Graph::from_edges(g.order(), rest));
    if (dr[u][v] < oracle::kInf) {
      const auto len = static_cast<std::size_t>(dr[u][v]) + 1;
      if (best == 0 || len < best) best = len;
    }
  }
  (void)d;
  return best;
}

bool regular(const Graph& g, std::size_t k) {
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) != k) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("orders and sizes") {
  CHECK(path_graph(6).size() == 5);
  CHECK(cycle_graph(6).size() == 6);
  CHECK(complete_graph(6).size() == 15);
  CHECK(star_graph(4).order() == 5);
  CHECK(wheel_graph(7).order() == 7);
  CHECK(wheel_graph(7).size() == 12);
  CHECK(complete_multipartite_graph({1, 2, 3}).size() == 11);
  CHECK(hypercube_graph(4).order() == 16);
  CHECK(hypercube_graph(4).size() == 32);
  CHECK(house_graph().size() == 6);
  CHECK(fig5_example_graph().order() == 6);
}

TEST_CASE("wheel(4) is K_4") { CHECK(wheel_graph(4) == complete_graph(4)); }

TEST_CASE("Petersen graph") {
  const Graph p = petersen_graph();
  CHECK(p.order() == 10);
  CHECK(regular(p, 3));
  CHECK(girth(p) == 5);
  CHECK(oracle::floyd_warshall(p)[0][7] <= 2);
}

TEST_CASE("hypercubes") {
  for (std::size_t d = 1; d <= 4; ++d) {
    const Graph q = hypercube_graph(d);
    CHECK(regular(q, d));
    CHECK(is_bipartite(q));
  }
  CHECK(girth(hypercube_graph(3)) == 4);
  CHECK_THROWS_AS(hypercube_graph(17), Error);
}

TEST_CASE("gadget graphs") {
  for (std::size_t q = 1; q <= 5; ++q) {
    const Graph full = gq_full_graph(q);
    CHECK(full.order() == 5 * q + 6);
    CHECK(is_connected(full));
    CHECK(full.leaf_count() == 2 * q + 2);
    const Graph core = gq_core_graph(q);
    CHECK(core.order() == 3 * q + 4);
    CHECK(is_connected(core));
    if (q >= 2) CHECK(strong_resolving_graph(core).boundary.size() == 3 * q + 1);
  }
  CHECK(gq_full_graph(2).label(0) == "a0");
  CHECK(gq_full_graph(2).label(15) == "x");
}

TEST_CASE("family spec parsing") {
  CHECK(FamilySpec::parse("cycle:7").name == Family::cycle);
  CHECK(FamilySpec::parse("cycle:7").params == std::vector<long>{7});
  CHECK(FamilySpec::parse("gq:4").name == Family::gq_full);
  CHECK(FamilySpec::parse("multipartite:1,2,3").name == Family::complete_multipartite);
  CHECK(FamilySpec::parse("tree:9,3").name == Family::random_tree);
  CHECK(FamilySpec::parse("random:9,3").name == Family::random_connected);
  CHECK(FamilySpec::parse("petersen").params.empty());
  CHECK(FamilySpec::parse("complete_multipartite:2,2").to_string() == "complete_multipartite:2,2");
  CHECK(generate(FamilySpec::parse("wheel:6")) == wheel_graph(6));

  auto code_of = [](auto&& f) {
    try {
      f();
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::invariant_violation;
  };
  CHECK(code_of([] { FamilySpec::parse("dodecahedron"); }) == ErrorCode::invalid_params);
  CHECK(code_of([] { FamilySpec::parse("cycle:x"); }) == ErrorCode::invalid_params);
  CHECK(code_of([] { generate(FamilySpec::parse("cycle:2")); }) == ErrorCode::invalid_params);
  CHECK(code_of([] { generate(FamilySpec::parse("wheel:3")); }) == ErrorCode::invalid_params);
  CHECK(code_of([] { generate(FamilySpec::parse("path")); }) == ErrorCode::invalid_params);
  CHECK(code_of([] { generate(FamilySpec::parse("petersen:3")); }) == ErrorCode::invalid_params);
  CHECK(code_of([] { generate(FamilySpec::parse("gq:0")); }) == ErrorCode::invalid_params);
}

TEST_CASE("seeded generators are deterministic") {
  SeededRng a(42), b(42);
  for (int i = 0; i < 10; ++i) {
    CHECK(random_tree(12, a) == random_tree(12, b));
    CHECK(random_connected_graph(9, 40, a) == random_connected_graph(9, 40, b));
  }
  CHECK(generate(FamilySpec::parse("tree:10,5")) == generate(FamilySpec::parse("tree:10,5")));
  SeededRng r(7);
  for (int i = 0; i < 30; ++i) {
    const std::size_t n = r.between(1, 15);
    const Graph t = random_tree(n, r);
    CHECK(t.order() == n);
    CHECK(t.size() == n - 1);
    CHECK(is_connected(t));
    CHECK(is_connected(random_connected_graph(n, 10, r)));
  }
}

TEST_CASE("corpus") {
  const auto named = named_corpus();
  const auto zero = corpus(1, 0, 12);
  REQUIRE(zero.size() == named.size());
  for (std::size_t i = 0; i < named.size(); ++i) CHECK(zero[i].graph == named[i].graph);
  const auto a = corpus(3, 25, 10);
  const auto b = corpus(3, 25, 10);
  CHECK(a.size() == named.size() + 25);
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].name == b[i].name);
    CHECK(a[i].graph == b[i].graph);
    CHECK(is_connected(a[i].graph));
    CHECK(a[i].graph.order() >= 2);
  }
}
