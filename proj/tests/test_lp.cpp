#include <doctest.h>

#include "oracles.hpp"
#include "sdimlab/error.hpp"
#include "sdimlab/lp.hpp"

using namespace sdim;

namespace {

LinearConstraint row(std::vector<Rational> a, Relation rel, Rational b) { return {std::move(a), rel, std::move(b)}; }

void check_covering_witness(const LpProblem& p, const LpSolution& s) {
  REQUIRE(s.assignment.size() == p.var_count);
  for (const auto& c : p.constraints) CHECK(s.assignment.sum_over(c) >= Rational(1));
  for (const auto& x : s.assignment.values()) {
    CHECK(x.sign() >= 0);
    CHECK(x <= Rational(1));
  }
  CHECK(s.assignment.total() == s.value);
}

}  // namespace

TEST_CASE("covering LP small cases") {
  SUBCASE("single pair") {
    const LpProblem p{2, {{0, 1}}};
    const LpSolution s = lp_solve(p);
    CHECK(s.status == LpStatus::optimal);
    CHECK(s.value == Rational(1));
    check_covering_witness(p, s);
  }
  SUBCASE("triangle edges") {
    const LpProblem p{3, {{0, 1}, {1, 2}, {0, 2}}};
    const LpSolution s = lp_solve(p);
    CHECK(s.value == Rational(3, 2));
    CHECK(oracle::covering_lp(3, p.constraints) == Rational(3, 2));
    check_covering_witness(p, s);
  }
  SUBCASE("star edges") {
    LpProblem p{6, {}};
    for (Vertex leaf = 1; leaf <= 5; ++leaf) p.constraints.push_back({0, leaf});
    const LpSolution s = lp_solve(p);
    CHECK(s.value == Rational(1));
    CHECK(oracle::covering_lp(6, p.constraints) == Rational(1));
    check_covering_witness(p, s);
  }
  SUBCASE("no constraints") {
    const LpSolution s = lp_solve(LpProblem{4, {}});
    CHECK(s.status == LpStatus::optimal);
    CHECK(s.value == Rational(0));
  }
  SUBCASE("an empty constraint is infeasible") {
    CHECK(lp_solve(LpProblem{2, {{0}, {}}}).status == LpStatus::infeasible);
  }
  SUBCASE("bad indices") {
    CHECK_THROWS_AS(lp_solve(LpProblem{2, {{0, 2}}}), Error);
    CHECK_THROWS_AS(lp_solve(LpProblem{3, {{2, 0}}}), Error);
  }
}

TEST_CASE("covering LP agrees with basic-solution enumeration") {
  SeededRng rng(61);
  for (int i = 0; i < 150; ++i) {
    const std::size_t vars = rng.between(1, 5);
    LpProblem p{vars, {}};
    const std::size_t count = rng.between(1, 8);
    for (std::size_t c = 0; c < count; ++c) {
      VertexSet set;
      for (Vertex v = 0; v < vars; ++v) {
        if (rng.chance(40)) set.push_back(v);
      }
      if (set.empty()) set.push_back(static_cast<Vertex>(rng.below(vars)));
      p.constraints.push_back(set);
    }
    const LpSolution s = lp_solve(p);
    REQUIRE(s.status == LpStatus::optimal);
    CHECK(s.value == oracle::covering_lp(vars, p.constraints));
    check_covering_witness(p, s);
  }
}

TEST_CASE("constraint reduction") {
  const auto reduced = reduce_covering_constraints({{0, 1, 2}, {1, 2}, {0, 3}, {1, 2}, {0, 1, 3}, {4}});
  CHECK(reduced == std::vector<VertexSet>{{4}, {0, 3}, {1, 2}});
}

TEST_CASE("general simplex") {
  SUBCASE("two inequalities with duals") {
    LinearProgram lp{{1, 1}, {row({1, 2}, Relation::less_equal, 4), row({3, 1}, Relation::less_equal, 6)}};
    const LinearSolution s = maximize(lp);
    REQUIRE(s.status == LpStatus::optimal);
    CHECK(s.value == Rational(14, 5));
    CHECK(s.x == std::vector<Rational>{Rational(8, 5), Rational(6, 5)});
    CHECK(s.duals == std::vector<Rational>{Rational(2, 5), Rational(1, 5)});
  }
  SUBCASE("equality and lower bound") {
    LinearProgram lp{{1, 0}, {row({1, 1}, Relation::equal, 3), row({0, 1}, Relation::greater_equal, 1)}};
    const LinearSolution s = maximize(lp);
    REQUIRE(s.status == LpStatus::optimal);
    CHECK(s.value == Rational(2));
    CHECK(s.duals.empty());
  }
  SUBCASE("redundant equality rows") {
    LinearProgram lp{{1, 0}, {row({1, 1}, Relation::equal, 2), row({2, 2}, Relation::equal, 4)}};
    const LinearSolution s = maximize(lp);
    REQUIRE(s.status == LpStatus::optimal);
    CHECK(s.value == Rational(2));
  }
  SUBCASE("negative right-hand side") {
    LinearProgram lp{{-1}, {row({-1}, Relation::less_equal, -1)}};
    const LinearSolution s = maximize(lp);
    REQUIRE(s.status == LpStatus::optimal);
    CHECK(s.value == Rational(-1));
  }
  SUBCASE("infeasible") {
    LinearProgram lp{{1}, {row({1}, Relation::less_equal, 1), row({1}, Relation::greater_equal, 2)}};
    CHECK(maximize(lp).status == LpStatus::infeasible);
  }
  SUBCASE("unbounded") {
    LinearProgram lp{{1, 0}, {row({1, -1}, Relation::less_equal, 1)}};
    CHECK(maximize(lp).status == LpStatus::unbounded);
  }
  SUBCASE("degenerate example that cycles under the largest-coefficient rule") {
    LinearProgram lp{{Rational(3, 4), -20, Rational(1, 2), -6},
                     {row({Rational(1, 4), -8, -1, 9}, Relation::less_equal, 0),
                      row({Rational(1, 2), -12, Rational(-1, 2), 3}, Relation::less_equal, 0),
                      row({0, 0, 1, 0}, Relation::less_equal, 1)}};
    const LinearSolution s = maximize(lp);
    REQUIRE(s.status == LpStatus::optimal);
    CHECK(s.value == Rational(5, 4));
  }
  SUBCASE("width mismatch") {
    LinearProgram lp{{1, 1}, {row({1}, Relation::less_equal, 1)}};
    CHECK_THROWS_AS(maximize(lp), Error);
  }
}

TEST_CASE("general simplex agrees with vertex enumeration on boxed programs") {
  // Every variable is boxed by x <= 4, so the feasible region is a polytope
  // and the optimum, when feasible, sits at a vertex.
  SeededRng rng(113);
  auto coeff = [&] { return Rational(static_cast<long>(rng.between(0, 6)) - 3); };
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = rng.between(1, 3);
    LinearProgram lp;
    for (std::size_t j = 0; j < n; ++j) lp.objective.push_back(coeff());
    const std::size_t extra = rng.between(1, 3);
    for (std::size_t i = 0; i < extra; ++i) {
      std::vector<Rational> a;
      for (std::size_t j = 0; j < n; ++j) a.push_back(coeff());
      const auto rel = static_cast<Relation>(rng.below(3));
      lp.constraints.push_back(row(a, rel, Rational(static_cast<long>(rng.between(0, 8)) - 4)));
    }
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<Rational> a(n);
      a[j] = 1;
      lp.constraints.push_back(row(a, Relation::less_equal, 4));
    }

    // Candidate vertices: n tight rows chosen among constraints and x_j = 0.
    std::vector<std::pair<std::vector<Rational>, Rational>> tight;
    for (const auto& c : lp.constraints) tight.emplace_back(c.coefficients, c.rhs);
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<Rational> a(n);
      a[j] = 1;
      tight.emplace_back(a, Rational(0));
    }
    auto feasible = [&](const std::vector<Rational>& x) {
      for (const auto& v : x) {
        if (v.sign() < 0) return false;
      }
      for (const auto& c : lp.constraints) {
        Rational lhs;
        for (std::size_t j = 0; j < n; ++j) lhs += c.coefficients[j] * x[j];
        if (c.relation == Relation::less_equal && lhs > c.rhs) return false;
        if (c.relation == Relation::greater_equal && lhs < c.rhs) return false;
        if (c.relation == Relation::equal && lhs != c.rhs) return false;
      }
      return true;
    };
    std::optional<Rational> best;
    std::vector<std::size_t> pick(n);
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t depth, std::size_t from) {
      if (depth == n) {
        std::vector<std::vector<Rational>> a;
        std::vector<Rational> b;
        for (std::size_t i : pick) {
          a.push_back(tight[i].first);
          b.push_back(tight[i].second);
        }
        const auto x = oracle::solve_square(a, b);
        if (!x || !feasible(*x)) return;
        Rational z;
        for (std::size_t j = 0; j < n; ++j) z += lp.objective[j] * (*x)[j];
        if (!best || z > *best) best = z;
        return;
      }
      for (std::size_t i = from; i < tight.size(); ++i) {
        pick[depth] = i;
        rec(depth + 1, i + 1);
      }
    };
    rec(0, 0);

    const LinearSolution s = maximize(lp);
    if (!best) {
      CHECK(s.status == LpStatus::infeasible);
      continue;
    }
    REQUIRE(s.status == LpStatus::optimal);
    CHECK(s.value == *best);
    CHECK(feasible(s.x));
    Rational z;
    for (std::size_t j = 0; j < n; ++j) z += lp.objective[j] * s.x[j];
    CHECK(z == s.value);
  }
}
