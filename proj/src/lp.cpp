#include "sdimlab/lp.hpp"

#include <algorithm>
#include <string>

#include "sdimlab/error.hpp"

namespace sdim {

Rational WeightFunction::total() const {
  Rational sum;
  for (const auto& v : values_) sum += v;
  return sum;
}

Rational WeightFunction::sum_over(std::span<const Vertex> vertices) const {
  Rational sum;
  for (Vertex v : vertices) sum += values_.at(v);
  return sum;
}

std::vector<VertexSet> reduce_covering_constraints(std::vector<VertexSet> constraints) {
  std::sort(constraints.begin(), constraints.end(), [](const VertexSet& a, const VertexSet& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  constraints.erase(std::unique(constraints.begin(), constraints.end()), constraints.end());

  std::size_t universe = 0;
  for (const auto& c : constraints) {
    if (!c.empty()) universe = std::max<std::size_t>(universe, c.back() + 1);
  }
  const std::size_t words = (universe + 63) / 64;
  auto bits_of = [words](const VertexSet& set) {
    std::vector<std::uint64_t> bits(words, 0);
    for (Vertex v : set) bits[v / 64] |= std::uint64_t{1} << (v % 64);
    return bits;
  };

  std::vector<VertexSet> kept;
  std::vector<std::vector<std::uint64_t>> kept_bits;
  for (auto& candidate : constraints) {
    const auto bits = bits_of(candidate);
    const bool dominated = std::any_of(kept_bits.begin(), kept_bits.end(), [&](const auto& smaller) {
      for (std::size_t w = 0; w < words; ++w) {
        if ((smaller[w] & ~bits[w]) != 0) return false;
      }
      return true;
    });
    if (dominated) continue;
    kept_bits.push_back(bits);
    kept.push_back(std::move(candidate));
  }
  return kept;
}

namespace {

// Dense tableau. Column layout: structural variables, then one auxiliary
// column per constraint (slack or surplus), then artificials.
class Tableau {
 public:
  Tableau(const LinearProgram& program) : program_(program) {
    const std::size_t n = program.objective.size();
    const std::size_t m = program.constraints.size();
    structural_ = n;

    std::vector<Relation> relation(m);
    std::vector<bool> flip(m, false);
    std::size_t artificials = 0;
    for (std::size_t i = 0; i < m; ++i) {
      const auto& row = program.constraints[i];
      if (row.coefficients.size() != n) {
        throw Error(ErrorCode::invalid_params, "constraint width does not match the variable count");
      }
      relation[i] = row.relation;
      if (row.rhs.sign() < 0) {
        flip[i] = true;
        if (relation[i] == Relation::less_equal) relation[i] = Relation::greater_equal;
        else if (relation[i] == Relation::greater_equal) relation[i] = Relation::less_equal;
      }
      if (relation[i] != Relation::less_equal) ++artificials;
    }

    aux_begin_ = n;
    artificial_begin_ = n + m;
    width_ = n + m + artificials;
    rows_.assign(m, std::vector<Rational>(width_ + 1));
    basis_.assign(m, 0);

    std::size_t next_artificial = artificial_begin_;
    for (std::size_t i = 0; i < m; ++i) {
      const auto& src = program.constraints[i];
      auto& row = rows_[i];
      for (std::size_t j = 0; j < n; ++j) row[j] = flip[i] ? -src.coefficients[j] : src.coefficients[j];
      row[width_] = flip[i] ? -src.rhs : src.rhs;
      switch (relation[i]) {
        case Relation::less_equal:
          row[aux_begin_ + i] = 1;
          basis_[i] = aux_begin_ + i;
          break;
        case Relation::greater_equal:
          row[aux_begin_ + i] = -1;
          row[next_artificial] = 1;
          basis_[i] = next_artificial++;
          break;
        case Relation::equal:
          row[next_artificial] = 1;
          basis_[i] = next_artificial++;
          break;
      }
    }
    all_slack_ = artificials == 0;
  }

  LinearSolution solve() {
    LinearSolution out;
    if (artificial_begin_ < width_) {
      // Phase 1: maximize -(sum of artificials).
      objective_.assign(width_ + 1, Rational());
      for (std::size_t j = artificial_begin_; j < width_; ++j) objective_[j] = 1;
      for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (basis_[i] >= artificial_begin_) subtract_row_from_objective(i, Rational(1));
      }
      run(width_);
      if (objective_[width_].sign() < 0) {
        out.status = LpStatus::infeasible;
        return out;
      }
      evict_artificials();
    }

    // Phase 2.
    objective_.assign(width_ + 1, Rational());
    for (std::size_t j = 0; j < structural_; ++j) objective_[j] = -program_.objective[j];
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const std::size_t b = basis_[i];
      if (b < structural_ && !program_.objective[b].is_zero()) {
        subtract_row_from_objective(i, -program_.objective[b]);
      }
    }
    if (!run(artificial_begin_)) {
      out.status = LpStatus::unbounded;
      return out;
    }

    out.status = LpStatus::optimal;
    out.value = objective_[width_];
    out.x.assign(structural_, Rational());
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (basis_[i] < structural_) out.x[basis_[i]] = rows_[i][width_];
    }
    if (all_slack_) {
      out.duals.resize(program_.constraints.size());
      for (std::size_t i = 0; i < out.duals.size(); ++i) out.duals[i] = objective_[aux_begin_ + i];
    }
    return out;
  }

 private:
  // objective -= factor * row i
  void subtract_row_from_objective(std::size_t i, const Rational& factor) {
    const auto& row = rows_[i];
    for (std::size_t j = 0; j <= width_; ++j) {
      if (!row[j].is_zero()) objective_[j] -= factor * row[j];
    }
  }

  void pivot(std::size_t r, std::size_t c) {
    auto& prow = rows_[r];
    const Rational inv = Rational(1) / prow[c];
    std::vector<std::size_t> nonzero;
    for (std::size_t j = 0; j <= width_; ++j) {
      if (prow[j].is_zero()) continue;
      prow[j] *= inv;
      nonzero.push_back(j);
    }
    auto eliminate = [&](std::vector<Rational>& row) {
      if (row[c].is_zero()) return;
      const Rational factor = row[c];
      for (std::size_t j : nonzero) row[j] -= factor * prow[j];
    };
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (i != r) eliminate(rows_[i]);
    }
    eliminate(objective_);
    basis_[r] = c;
  }

  // Bland's rule over columns [0, limit). Returns false when unbounded.
  bool run(std::size_t limit) {
    while (true) {
      std::size_t entering = limit;
      for (std::size_t j = 0; j < limit; ++j) {
        if (objective_[j].sign() < 0) {
          entering = j;
          break;
        }
      }
      if (entering == limit) return true;

      std::size_t leaving = rows_.size();
      Rational best_ratio;
      for (std::size_t i = 0; i < rows_.size(); ++i) {
        const Rational& a = rows_[i][entering];
        if (a.sign() <= 0) continue;
        Rational ratio = rows_[i][width_] / a;
        if (leaving == rows_.size() || ratio < best_ratio ||
            (ratio == best_ratio && basis_[i] < basis_[leaving])) {
          leaving = i;
          best_ratio = std::move(ratio);
        }
      }
      if (leaving == rows_.size()) return false;
      pivot(leaving, entering);
    }
  }

  void evict_artificials() {
    for (std::size_t i = 0; i < rows_.size();) {
      if (basis_[i] < artificial_begin_) {
        ++i;
        continue;
      }
      std::size_t column = artificial_begin_;
      for (std::size_t j = 0; j < artificial_begin_; ++j) {
        if (!rows_[i][j].is_zero()) {
          column = j;
          break;
        }
      }
      if (column < artificial_begin_) {
        pivot(i, column);
        ++i;
      } else {
        // Redundant equality: the row is a combination of the others.
        rows_.erase(rows_.begin() + static_cast<std::ptrdiff_t>(i));
        basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(i));
        all_slack_ = false;
      }
    }
  }

  const LinearProgram& program_;
  std::size_t structural_ = 0;
  std::size_t aux_begin_ = 0;
  std::size_t artificial_begin_ = 0;
  std::size_t width_ = 0;
  bool all_slack_ = false;
  std::vector<std::vector<Rational>> rows_;
  std::vector<Rational> objective_;
  std::vector<std::size_t> basis_;
};

}  // namespace

LinearSolution maximize(const LinearProgram& program) { return Tableau(program).solve(); }

LpSolution lp_solve(const LpProblem& problem) {
  LpSolution out;
  out.assignment = WeightFunction(problem.var_count);
  for (const auto& c : problem.constraints) {
    if (c.empty()) {
      out.status = LpStatus::infeasible;
      return out;
    }
    if (!std::is_sorted(c.begin(), c.end()) || c.back() >= problem.var_count) {
      throw Error(ErrorCode::invalid_params, "constraint indices must be sorted and below var_count");
    }
  }
  const std::vector<VertexSet> constraints = reduce_covering_constraints(problem.constraints);
  out.status = LpStatus::optimal;
  if (constraints.empty()) return out;

  // The packing dual  max sum y_c  s.t.  sum_{c containing j} y_c <= 1,  y >= 0
  // starts feasible at y = 0. The primal optimum is its row duals.
  std::vector<Vertex> used;
  for (const auto& c : constraints) used.insert(used.end(), c.begin(), c.end());
  std::sort(used.begin(), used.end());
  used.erase(std::unique(used.begin(), used.end()), used.end());
  std::vector<std::size_t> row_of(problem.var_count, 0);
  for (std::size_t r = 0; r < used.size(); ++r) row_of[used[r]] = r;

  LinearProgram dual;
  dual.objective.assign(constraints.size(), Rational(1));
  dual.constraints.assign(used.size(),
                          LinearConstraint{std::vector<Rational>(constraints.size()), Relation::less_equal, 1});
  for (std::size_t c = 0; c < constraints.size(); ++c) {
    for (Vertex v : constraints[c]) dual.constraints[row_of[v]].coefficients[c] = 1;
  }
  const LinearSolution solved = maximize(dual);
  if (solved.status != LpStatus::optimal) {
    throw Error(ErrorCode::invariant_violation, "packing dual of a covering LP did not reach an optimum");
  }

  out.value = solved.value;
  for (std::size_t r = 0; r < used.size(); ++r) out.assignment[used[r]] = solved.duals[r];

  // Strong duality certificate, checked exactly: y packs, x covers, equal weights.
  Rational packed;
  std::vector<Rational> load(used.size());
  for (std::size_t c = 0; c < constraints.size(); ++c) {
    const Rational& y = solved.x[c];
    if (y.sign() < 0) throw Error(ErrorCode::invariant_violation, "packing dual has a negative entry");
    packed += y;
    for (Vertex v : constraints[c]) load[row_of[v]] += y;
  }
  if (packed != out.value || std::any_of(load.begin(), load.end(), [](const Rational& l) { return l > Rational(1); })) {
    throw Error(ErrorCode::invariant_violation, "packing dual certificate is infeasible");
  }
  for (const auto& c : constraints) {
    if (out.assignment.sum_over(c) < Rational(1)) {
      throw Error(ErrorCode::invariant_violation, "covering LP witness violates a constraint");
    }
  }
  for (const auto& x : out.assignment.values()) {
    if (x.sign() < 0 || x > Rational(1)) {
      throw Error(ErrorCode::invariant_violation, "covering LP witness leaves [0, 1]");
    }
  }
  if (out.assignment.total() != out.value) {
    throw Error(ErrorCode::invariant_violation, "covering LP witness weight differs from the optimum");
  }
  return out;
}

}  // namespace sdim
