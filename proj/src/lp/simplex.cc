// Copyright 2026 The sproute Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "sproute/lp/simplex.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sproute/errors.hpp"

namespace sproute::lp {
namespace {

constexpr double kReducedCostTol = 1e-9;
constexpr double kPhaseOneTol = 1e-9;
constexpr double kRatioTieTol = 1e-12;
constexpr std::size_t kBlandAfterDegenerate = 25;

enum class State : std::uint8_t { kBasic, kAtLower, kAtUpper };

// Bounds after folding singleton rows, plus the rows that survive.
struct Reduced {
  std::vector<double> lower;
  std::vector<double> upper;
  std::vector<std::size_t> rows;
  bool infeasible = false;
};

Reduced fold_singleton_rows(const LinearProgram& lp) {
  Reduced out;
  const std::size_t n = lp.num_vars;
  out.lower.resize(n);
  out.upper.resize(n);
  for (std::size_t j = 0; j < n; ++j) {
    out.lower[j] = lp.lower_bound(j);
    out.upper[j] = lp.upper_bound(j);
  }
  for (std::size_t r = 0; r < lp.constraints.size(); ++r) {
    const Constraint& row = lp.constraints[r];
    std::size_t nonzeros = 0;
    std::size_t last = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (row.coefficients[j] != 0.0) {
        ++nonzeros;
        last = j;
      }
    }
    if (nonzeros == 0) {
      const bool ok = (row.relation == Relation::kLessEqual && row.rhs >= -kFeasibilityTol) ||
                      (row.relation == Relation::kGreaterEqual && row.rhs <= kFeasibilityTol) ||
                      (row.relation == Relation::kEqual && std::abs(row.rhs) <= kFeasibilityTol);
      if (!ok) out.infeasible = true;
      continue;
    }
    if (nonzeros > 1) {
      out.rows.push_back(r);
      continue;
    }
    const double a = row.coefficients[last];
    const double bound = row.rhs / a;
    Relation rel = row.relation;
    if (a < 0.0 && rel != Relation::kEqual) {
      rel = rel == Relation::kLessEqual ? Relation::kGreaterEqual : Relation::kLessEqual;
    }
    if (rel != Relation::kGreaterEqual) out.upper[last] = std::min(out.upper[last], bound);
    if (rel != Relation::kLessEqual) out.lower[last] = std::max(out.lower[last], bound);
  }
  for (std::size_t j = 0; j < n; ++j) {
    if (out.lower[j] > out.upper[j] + kFeasibilityTol) {
      out.infeasible = true;
    } else if (out.lower[j] > out.upper[j]) {
      out.upper[j] = out.lower[j];
    }
  }
  return out;
}

// Dense tableau B^-1 A over shifted variables y = x - lower, each in
// [0, range]. Column order: structural, then one logical per inequality row,
// then one artificial per row that lacks a feasible logical.
class BoundedSimplex {
 public:
  BoundedSimplex(const LinearProgram& lp, const Reduced& reduced)
      : num_structural_(lp.num_vars), num_rows_(reduced.rows.size()), lower_(reduced.lower) {
    std::size_t num_logical = 0;
    for (std::size_t r : reduced.rows) {
      if (lp.constraints[r].relation != Relation::kEqual) ++num_logical;
    }
    // Pessimistic column count; trimmed below once artificials are known.
    const std::size_t max_cols = num_structural_ + num_logical + num_rows_;
    std::vector<double> dense(num_rows_ * max_cols, 0.0);
    range_.assign(max_cols, kInfinity);
    for (std::size_t j = 0; j < num_structural_; ++j) {
      range_[j] = reduced.upper[j] - reduced.lower[j];
    }
    basis_.assign(num_rows_, 0);
    beta_.assign(num_rows_, 0.0);

    std::size_t next_logical = num_structural_;
    std::vector<std::size_t> needs_artificial;
    std::vector<std::ptrdiff_t> logical_col(num_rows_, -1);
    std::vector<double> logical_sign(num_rows_, 0.0);
    for (std::size_t i = 0; i < num_rows_; ++i) {
      const Constraint& row = lp.constraints[reduced.rows[i]];
      double rhs = row.rhs;
      for (std::size_t j = 0; j < num_structural_; ++j) {
        rhs -= row.coefficients[j] * lower_[j];
      }
      double logical = 0.0;
      if (row.relation == Relation::kLessEqual) logical = 1.0;
      if (row.relation == Relation::kGreaterEqual) logical = -1.0;
      const double flip = rhs < 0.0 ? -1.0 : 1.0;
      double* t = dense.data() + i * max_cols;
      for (std::size_t j = 0; j < num_structural_; ++j) {
        t[j] = flip * row.coefficients[j];
      }
      if (logical != 0.0) {
        logical_col[i] = static_cast<std::ptrdiff_t>(next_logical);
        logical_sign[i] = flip * logical;
        t[next_logical] = flip * logical;
        ++next_logical;
      }
      beta_[i] = flip * rhs;
      if (logical_sign[i] > 0.0) {
        basis_[i] = static_cast<std::size_t>(logical_col[i]);
      } else {
        needs_artificial.push_back(i);
      }
    }
    first_artificial_ = next_logical;
    num_cols_ = first_artificial_ + needs_artificial.size();
    for (std::size_t k = 0; k < needs_artificial.size(); ++k) {
      const std::size_t i = needs_artificial[k];
      dense[i * max_cols + first_artificial_ + k] = 1.0;
      basis_[i] = first_artificial_ + k;
    }
    tableau_.resize(num_rows_ * num_cols_);
    for (std::size_t i = 0; i < num_rows_; ++i) {
      std::copy_n(dense.data() + i * max_cols, num_cols_, tableau_.data() + i * num_cols_);
    }
    range_.resize(num_cols_);
    state_.assign(num_cols_, State::kAtLower);
    for (std::size_t i = 0; i < num_rows_; ++i) state_[basis_[i]] = State::kBasic;
    reduced_cost_.assign(num_cols_, 0.0);
    max_iterations_ = 200 * (num_rows_ + num_cols_) + 1000;
  }

  bool has_artificials() const { return num_cols_ > first_artificial_; }

  // Minimizes the sum of artificials; true when it reaches zero.
  bool run_phase_one() {
    if (!has_artificials()) return true;
    std::vector<double> cost(num_cols_, 0.0);
    for (std::size_t j = first_artificial_; j < num_cols_; ++j) cost[j] = -1.0;
    optimize(cost);
    double residual = 0.0;
    for (std::size_t i = 0; i < num_rows_; ++i) {
      if (basis_[i] >= first_artificial_) residual += beta_[i];
    }
    if (residual > kPhaseOneTol) return false;
    drive_out_artificials();
    return true;
  }

  LpStatus run_phase_two(const std::vector<double>& objective) {
    std::vector<double> cost(num_cols_, 0.0);
    std::copy(objective.begin(), objective.end(), cost.begin());
    return optimize(cost);
  }

  std::vector<double> values() const {
    std::vector<double> shifted(num_cols_, 0.0);
    for (std::size_t j = 0; j < num_cols_; ++j) {
      if (state_[j] == State::kAtUpper) shifted[j] = range_[j];
    }
    for (std::size_t i = 0; i < num_rows_; ++i) {
      const std::size_t j = basis_[i];
      shifted[j] = std::clamp(beta_[i], 0.0, range_[j]);
    }
    std::vector<double> x(num_structural_);
    for (std::size_t j = 0; j < num_structural_; ++j) x[j] = lower_[j] + shifted[j];
    return x;
  }

  std::size_t iterations() const { return iterations_; }

 private:
  double* row(std::size_t i) { return tableau_.data() + i * num_cols_; }
  double at(std::size_t i, std::size_t j) const { return tableau_[i * num_cols_ + j]; }

  bool enterable(std::size_t j) const {
    return j < first_artificial_ && state_[j] != State::kBasic && range_[j] > 0.0;
  }

  void price(const std::vector<double>& cost) {
    reduced_cost_ = cost;
    for (std::size_t i = 0; i < num_rows_; ++i) {
      const double cb = cost[basis_[i]];
      if (cb == 0.0) continue;
      const double* t = tableau_.data() + i * num_cols_;
      for (std::size_t j = 0; j < num_cols_; ++j) reduced_cost_[j] -= cb * t[j];
    }
    for (std::size_t i = 0; i < num_rows_; ++i) reduced_cost_[basis_[i]] = 0.0;
  }

  std::optional<std::size_t> choose_entering(bool bland) const {
    std::optional<std::size_t> best;
    double best_score = 0.0;
    for (std::size_t j = 0; j < first_artificial_; ++j) {
      if (!enterable(j)) continue;
      const double d = reduced_cost_[j];
      const bool improving = (state_[j] == State::kAtLower && d > kReducedCostTol) ||
                             (state_[j] == State::kAtUpper && d < -kReducedCostTol);
      if (!improving) continue;
      if (bland) return j;
      if (std::abs(d) > best_score) {
        best_score = std::abs(d);
        best = j;
      }
    }
    return best;
  }

  void pivot(std::size_t p, std::size_t j) {
    double* prow = row(p);
    const double inv = 1.0 / prow[j];
    for (std::size_t k = 0; k < num_cols_; ++k) prow[k] *= inv;
    prow[j] = 1.0;
    for (std::size_t i = 0; i < num_rows_; ++i) {
      if (i == p) continue;
      double* t = row(i);
      const double f = t[j];
      if (f == 0.0) continue;
      for (std::size_t k = 0; k < num_cols_; ++k) t[k] -= f * prow[k];
      t[j] = 0.0;
    }
    const double f = reduced_cost_[j];
    if (f != 0.0) {
      for (std::size_t k = 0; k < num_cols_; ++k) reduced_cost_[k] -= f * prow[k];
      reduced_cost_[j] = 0.0;
    }
  }

  LpStatus optimize(const std::vector<double>& cost) {
    price(cost);
    std::size_t degenerate_run = 0;
    while (true) {
      if (++iterations_ > max_iterations_) {
        throw Error("simplex exceeded " + std::to_string(max_iterations_) + " iterations");
      }
      const auto entering = choose_entering(degenerate_run >= kBlandAfterDegenerate);
      if (!entering) return LpStatus::kOptimal;
      const std::size_t j = *entering;
      const double dir = state_[j] == State::kAtLower ? 1.0 : -1.0;

      double step = range_[j];
      std::optional<std::size_t> leave;
      bool leave_at_upper = false;
      for (std::size_t i = 0; i < num_rows_; ++i) {
        const double alpha = at(i, j) * dir;
        const std::size_t b = basis_[i];
        double limit;
        bool to_upper;
        if (alpha > kPivotTol) {
          limit = beta_[i] / alpha;
          to_upper = false;
        } else if (alpha < -kPivotTol && std::isfinite(range_[b])) {
          limit = (range_[b] - beta_[i]) / -alpha;
          to_upper = true;
        } else {
          continue;
        }
        limit = std::max(limit, 0.0);
        const bool better = !leave ? limit < step
                                   : (limit < step - kRatioTieTol ||
                                      (limit <= step + kRatioTieTol && b < basis_[*leave]));
        if (better) {
          step = limit;
          leave = i;
          leave_at_upper = to_upper;
        }
      }
      if (!std::isfinite(step)) return LpStatus::kUnbounded;
      degenerate_run = step > 0.0 ? 0 : degenerate_run + 1;

      for (std::size_t i = 0; i < num_rows_; ++i) {
        const double alpha = at(i, j);
        if (alpha != 0.0) beta_[i] -= step * dir * alpha;
      }
      if (!leave) {
        state_[j] = state_[j] == State::kAtLower ? State::kAtUpper : State::kAtLower;
        continue;
      }
      const double entering_value = (state_[j] == State::kAtUpper ? range_[j] : 0.0) + dir * step;
      const std::size_t p = *leave;
      state_[basis_[p]] = leave_at_upper ? State::kAtUpper : State::kAtLower;
      pivot(p, j);
      basis_[p] = j;
      state_[j] = State::kBasic;
      beta_[p] = entering_value;
    }
  }

  void drive_out_artificials() {
    for (std::size_t p = 0; p < num_rows_; ++p) {
      if (basis_[p] < first_artificial_) continue;
      std::optional<std::size_t> best;
      double best_abs = kPivotTol;
      for (std::size_t j = 0; j < first_artificial_; ++j) {
        if (state_[j] == State::kBasic) continue;
        const double a = std::abs(at(p, j));
        if (a > best_abs) {
          best_abs = a;
          best = j;
        }
      }
      if (!best) continue;  // redundant row; the artificial stays basic at zero
      const std::size_t j = *best;
      const double value = state_[j] == State::kAtUpper ? range_[j] : 0.0;
      state_[basis_[p]] = State::kAtLower;
      pivot(p, j);
      basis_[p] = j;
      state_[j] = State::kBasic;
      beta_[p] = value;
    }
    for (std::size_t j = first_artificial_; j < num_cols_; ++j) range_[j] = 0.0;
  }

  std::size_t num_structural_;
  std::size_t num_rows_;
  std::size_t num_cols_ = 0;
  std::size_t first_artificial_ = 0;
  std::vector<double> lower_;
  std::vector<double> range_;
  std::vector<double> tableau_;
  std::vector<double> beta_;
  std::vector<double> reduced_cost_;
  std::vector<std::size_t> basis_;
  std::vector<State> state_;
  std::size_t iterations_ = 0;
  std::size_t max_iterations_ = 0;
};

LpSolution solve(const LinearProgram& lp, bool phase_one_only) {
  validate(lp);
  LpSolution solution;
  const Reduced reduced = fold_singleton_rows(lp);
  if (reduced.infeasible) return solution;

  BoundedSimplex simplex(lp, reduced);
  if (!simplex.run_phase_one()) {
    solution.iterations = simplex.iterations();
    return solution;
  }
  const bool has_objective =
      !phase_one_only && lp.sense == Sense::kMaximize &&
      std::any_of(lp.objective.begin(), lp.objective.end(), [](double c) { return c != 0.0; });
  if (has_objective && simplex.run_phase_two(lp.objective) == LpStatus::kUnbounded) {
    solution.status = LpStatus::kUnbounded;
    solution.iterations = simplex.iterations();
    return solution;
  }
  solution.status = LpStatus::kOptimal;
  solution.values = simplex.values();
  solution.objective_value = objective_at(lp, solution.values);
  solution.iterations = simplex.iterations();
  return solution;
}

}  // namespace

LpSolution solve_lp(const LinearProgram& lp) { return solve(lp, false); }

bool check_feasible(const LinearProgram& lp) { return solve(lp, true).optimal(); }

}  // namespace sproute::lp
