#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "sdimlab/graph.hpp"
#include "sdimlab/rational.hpp"

namespace sdim {

/// Vertex weights g: V -> [0, 1].
class WeightFunction {
 public:
  WeightFunction() = default;
  explicit WeightFunction(std::size_t n) : values_(n) {}
  explicit WeightFunction(std::vector<Rational> values) : values_(std::move(values)) {}

  std::size_t size() const noexcept { return values_.size(); }
  const Rational& operator[](std::size_t v) const { return values_[v]; }
  Rational& operator[](std::size_t v) { return values_[v]; }
  const std::vector<Rational>& values() const noexcept { return values_; }

  Rational total() const;
  Rational sum_over(std::span<const Vertex> vertices) const;

 private:
  std::vector<Rational> values_;
};

/// minimize sum x_i subject to sum_{i in C} x_i >= 1 for every constraint C,
/// 0 <= x_i <= 1.
struct LpProblem {
  std::size_t var_count = 0;
  std::vector<VertexSet> constraints;
};

enum class LpStatus { optimal, infeasible, unbounded };

struct LpSolution {
  LpStatus status = LpStatus::infeasible;
  Rational value;
  WeightFunction assignment;
};

/// Drops duplicate constraints and every constraint that contains another
/// one. Both leave the feasible region of a covering LP unchanged. Input
/// sets must be sorted; the result is sorted by (size, contents).
std::vector<VertexSet> reduce_covering_constraints(std::vector<VertexSet> constraints);

/// Exact optimum of a covering LP. An empty constraint makes it infeasible.
LpSolution lp_solve(const LpProblem& problem);

// General dense simplex over exact rationals, used for the covering LP and
// for probes that add further constraints.

enum class Relation { less_equal, equal, greater_equal };

struct LinearConstraint {
  std::vector<Rational> coefficients;  // one per variable
  Relation relation = Relation::less_equal;
  Rational rhs;
};

/// maximize objective . x subject to constraints, x >= 0.
struct LinearProgram {
  std::vector<Rational> objective;
  std::vector<LinearConstraint> constraints;
};

struct LinearSolution {
  LpStatus status = LpStatus::infeasible;
  Rational value;
  std::vector<Rational> x;
  /// Optimal dual values, one per constraint. Filled only when every
  /// constraint is `<=` with non-negative right-hand side.
  std::vector<Rational> duals;
};

/// Two-phase tableau simplex with Bland's rule.
LinearSolution maximize(const LinearProgram& program);

}  // namespace sdim
