#include <doctest.h>

#include "oracles.hpp"
#include "sdimlab/distance.hpp"
#include "sdimlab/error.hpp"
#include "sdimlab/families.hpp"
#include "sdimlab/graph.hpp"
#include "sdimlab/isomorphism.hpp"

using namespace sdim;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return ErrorCode::invariant_violation;
}

}  // namespace

TEST_CASE("build_graph normalizes duplicate and reversed edges") {
  const Graph g = build_graph(3, {{0, 1}, {1, 0}, {1, 2}, {0, 1}});
  CHECK(g.order() == 3);
  CHECK(g.size() == 2);
  CHECK(g.edges() == std::vector<Edge>{{0, 1}, {1, 2}});
  CHECK(g.degree(1) == 2);
  CHECK(g.adjacent(2, 1));
  CHECK_FALSE(g.adjacent(0, 2));
}

TEST_CASE("build_graph rejects bad input") {
  CHECK(code_of([] { build_graph(3, {{0, 3}}); }) == ErrorCode::invalid_vertex);
  CHECK(code_of([] { build_graph(3, {{1, 1}}); }) == ErrorCode::self_loop);
  CHECK(code_of([] { Graph::from_edges(2, {}, {"a"}); }) == ErrorCode::invalid_params);
}

TEST_CASE("house edge list has the expected degrees and matches the generator") {
  const Graph g = build_graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {1, 3}});
  std::vector<std::size_t> degrees;
  for (Vertex v = 0; v < 5; ++v) degrees.push_back(g.degree(v));
  CHECK(degrees == std::vector<std::size_t>{2, 3, 2, 3, 2});
  CHECK(is_isomorphic(g, house_graph()));
}

TEST_CASE("labels default to ids and never affect equality") {
  const Graph g = path_graph(3);
  CHECK(g.label(2) == "2");
  const Graph named = g.with_labels({"a", "b", "c"});
  CHECK(named.label(1) == "b");
  CHECK(named == g);
}

TEST_CASE("complement and induced subgraph") {
  const Graph c4 = cycle_graph(4);
  const Graph co = complement(c4);
  CHECK(co.size() == 2);
  CHECK(co.adjacent(0, 2));
  CHECK(co.adjacent(1, 3));
  const std::vector<Vertex> keep{0, 1, 2};
  const Graph sub = induced_subgraph(c4, keep);
  CHECK(sub == path_graph(3));
}

TEST_CASE("components and connectivity") {
  const Graph g = disjoint_union(path_graph(3), cycle_graph(3));
  const auto parts = connected_components(g);
  REQUIRE(parts.size() == 2);
  CHECK(parts[0] == VertexSet{0, 1, 2});
  CHECK(parts[1] == VertexSet{3, 4, 5});
  CHECK_FALSE(is_connected(g));
  CHECK(is_connected(petersen_graph()));
  CHECK(code_of([&] { cut_vertices(g); }) == ErrorCode::disconnected_input);
}

TEST_CASE("cut vertices agree with removal test") {
  SeededRng rng(101);
  for (int i = 0; i < 200; ++i) {
    const Graph g = random_connected_graph(rng.between(2, 10), static_cast<unsigned>(rng.between(20, 70)), rng);
    CHECK(cut_vertices(g) == oracle::cut_vertices(g));
  }
  CHECK(cut_vertices(path_graph(5)) == VertexSet{1, 2, 3});
  CHECK(cut_vertices(cycle_graph(5)).empty());
}

TEST_CASE("bipartiteness") {
  CHECK(is_bipartite(cycle_graph(6)));
  CHECK_FALSE(is_bipartite(cycle_graph(7)));
  CHECK(is_bipartite(hypercube_graph(3)));
  CHECK_FALSE(is_bipartite(petersen_graph()));
  CHECK(is_bipartite(empty_graph(3)));
}

TEST_CASE("twin partition") {
  SUBCASE("complete graph is one true twin class") {
    const TwinPartition tp = twin_partition(complete_graph(5));
    REQUIRE(tp.classes.size() == 1);
    CHECK(tp.class_type[0] == TwinClass::true_twin_clique);
    CHECK(tp.m2 == 5);
  }
  SUBCASE("empty graph is one false twin class") {
    const TwinPartition tp = twin_partition(empty_graph(4));
    REQUIRE(tp.classes.size() == 1);
    CHECK(tp.class_type[0] == TwinClass::false_twin_independent);
  }
  SUBCASE("six-vertex example has two vertices of each type") {
    const Graph g = fig5_example_graph();
    const TwinPartition tp = twin_partition(g);
    CHECK(tp.m1 == 2);
    CHECK(tp.m2 == 2);
    CHECK(tp.m3 == 2);
    CHECK(true_twins(g, 0, 2));
    CHECK(false_twins(g, 1, 3));
  }
  SUBCASE("classes partition the vertices on random graphs") {
    SeededRng rng(7);
    for (int i = 0; i < 100; ++i) {
      const Graph g = random_graph(rng.between(1, 9), 50, rng);
      const TwinPartition tp = twin_partition(g);
      std::vector<int> seen(g.order(), 0);
      for (std::size_t c = 0; c < tp.classes.size(); ++c) {
        const auto& cls = tp.classes[c];
        for (Vertex v : cls) ++seen[v];
        for (Vertex u : cls) {
          for (Vertex v : cls) {
            if (u == v) continue;
            if (tp.class_type[c] == TwinClass::true_twin_clique) CHECK(true_twins(g, u, v));
            if (tp.class_type[c] == TwinClass::false_twin_independent) CHECK(false_twins(g, u, v));
          }
        }
      }
      CHECK(std::all_of(seen.begin(), seen.end(), [](int s) { return s == 1; }));
      CHECK(tp.m1 + tp.m2 + tp.m3 == g.order());
    }
  }
}

TEST_CASE("component profile") {
  const Graph g = disjoint_union(cycle_graph(4), star_graph(3));
  const auto profile = component_profile(g);
  REQUIRE(profile.size() == 2);
  CHECK(profile[0].is_regular);
  CHECK(*profile[0].regular_degree == 2);
  CHECK(profile[0].is_bipartite);
  CHECK_FALSE(profile[1].is_regular);
}

TEST_CASE("BFS distances match Floyd-Warshall") {
  SeededRng rng(11);
  for (int i = 0; i < 100; ++i) {
    const Graph g = random_graph(rng.between(1, 12), 30, rng);
    const DistanceMatrix d = all_pairs_distances(g);
    const auto ref = oracle::floyd_warshall(g);
    for (Vertex u = 0; u < g.order(); ++u) {
      for (Vertex v = 0; v < g.order(); ++v) {
        if (ref[u][v] >= oracle::kInf) {
          CHECK_FALSE(d.distance(u, v).has_value());
          CHECK(code_of([&] { (void)d.at(u, v); }) == ErrorCode::different_components);
        } else {
          CHECK(d.at(u, v) == static_cast<std::uint32_t>(ref[u][v]));
        }
      }
    }
  }
  CHECK(all_pairs_distances(path_graph(6)).diameter() == 5);
  CHECK(all_pairs_distances(petersen_graph()).diameter() == 2);
}
