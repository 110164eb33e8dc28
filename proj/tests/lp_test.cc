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

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "gtest/gtest.h"
#include "sproute/errors.hpp"
#include "sproute/lp/linear_program.hpp"
#include "sproute/lp/simplex.hpp"

namespace sproute::lp {
namespace {

using R = Relation;

TEST(SolveLpTest, SingleBindingConstraint) {
  LinearProgram lp(1);
  lp.maximize({1.0});
  lp.add_row({{0, 1.0}}, R::kLessEqual, 3.0);
  const LpSolution s = solve_lp(lp);
  ASSERT_EQ(s.status, LpStatus::kOptimal);
  EXPECT_NEAR(s.values[0], 3.0, 1e-12);
  EXPECT_NEAR(*s.objective_value, 3.0, 1e-12);
}

TEST(SolveLpTest, ContradictoryBoundsAreInfeasible) {
  LinearProgram lp(1);
  lp.add_row({{0, 1.0}}, R::kGreaterEqual, 1.0);
  lp.add_row({{0, 1.0}}, R::kLessEqual, 0.0);
  const LpSolution s = solve_lp(lp);
  EXPECT_EQ(s.status, LpStatus::kInfeasible);
  EXPECT_TRUE(s.values.empty());
  EXPECT_FALSE(s.objective_value.has_value());
  EXPECT_FALSE(check_feasible(lp));
}

TEST(SolveLpTest, ContradictionAcrossMultiVariableRows) {
  LinearProgram lp(2);
  lp.add_row({{0, 1.0}, {1, 1.0}}, R::kGreaterEqual, 4.0);
  lp.add_row({{0, 1.0}, {1, 2.0}}, R::kLessEqual, 3.0);
  EXPECT_FALSE(check_feasible(lp));
}

TEST(SolveLpTest, TwoVariableOptimumMatchesGridSearch) {
  // maximize x1 + x2 s.t. x1 + x2 <= 5, x1 <= 2.
  LinearProgram lp(2);
  lp.maximize({1.0, 1.0});
  lp.add_row({{0, 1.0}, {1, 1.0}}, R::kLessEqual, 5.0);
  lp.add_row({{0, 1.0}}, R::kLessEqual, 2.0);

  // Brute force over [0,5]^2 at step 0.01.
  double grid_best = -1.0;
  for (int a = 0; a <= 500; ++a) {
    for (int b = 0; b <= 500; ++b) {
      const double x1 = a * 0.01;
      const double x2 = b * 0.01;
      if (x1 + x2 <= 5.0 + 1e-12 && x1 <= 2.0 + 1e-12) grid_best = std::max(grid_best, x1 + x2);
    }
  }
  EXPECT_NEAR(grid_best, 5.0, 1e-9);

  const LpSolution s = solve_lp(lp);
  ASSERT_TRUE(s.optimal());
  EXPECT_NEAR(*s.objective_value, grid_best, 1e-9);
  EXPECT_LE(max_violation(lp, s.values), kFeasibilityTol);
}

TEST(SolveLpTest, UnboundedObjective) {
  LinearProgram lp(2);
  lp.maximize({1.0, 0.0});
  lp.add_row({{0, 1.0}, {1, -1.0}}, R::kLessEqual, 1.0);
  EXPECT_EQ(solve_lp(lp).status, LpStatus::kUnbounded);
  // The feasibility check ignores the objective.
  EXPECT_TRUE(check_feasible(lp));
}

TEST(SolveLpTest, EqualityRowsAndNegativeRhs) {
  // x + y = 4, x - y >= -2, maximize 2x - y  ->  x = 4, y = 0.
  LinearProgram lp(2);
  lp.maximize({2.0, -1.0});
  lp.add_row({{0, 1.0}, {1, 1.0}}, R::kEqual, 4.0);
  lp.add_row({{0, 1.0}, {1, -1.0}}, R::kGreaterEqual, -2.0);
  const LpSolution s = solve_lp(lp);
  ASSERT_TRUE(s.optimal());
  EXPECT_NEAR(s.values[0], 4.0, 1e-9);
  EXPECT_NEAR(s.values[1], 0.0, 1e-9);
}

TEST(SolveLpTest, HonoursShiftedAndUpperBounds) {
  // maximize x + y with 1 <= x <= 2.5, -3 <= y <= -1, x + y <= 1.
  LinearProgram lp(2);
  lp.maximize({1.0, 3.0});
  lp.set_lower_bound(0, 1.0);
  lp.set_upper_bound(0, 2.5);
  lp.set_lower_bound(1, -3.0);
  lp.set_upper_bound(1, -1.0);
  lp.add_row({{0, 1.0}, {1, 1.0}}, R::kLessEqual, 1.0);
  const LpSolution s = solve_lp(lp);
  ASSERT_TRUE(s.optimal());
  EXPECT_NEAR(s.values[0], 2.0, 1e-9);
  EXPECT_NEAR(s.values[1], -1.0, 1e-9);
  EXPECT_NEAR(*s.objective_value, -1.0, 1e-9);
}

TEST(SolveLpTest, RedundantEqualityRows) {
  LinearProgram lp(3);
  lp.maximize({1.0, 1.0, 1.0});
  lp.add_row({{0, 1.0}, {1, 1.0}}, R::kEqual, 2.0);
  lp.add_row({{0, 2.0}, {1, 2.0}}, R::kEqual, 4.0);
  lp.add_row({{1, 1.0}, {2, 1.0}}, R::kLessEqual, 3.0);
  const LpSolution s = solve_lp(lp);
  ASSERT_TRUE(s.optimal());
  EXPECT_NEAR(*s.objective_value, 5.0, 1e-9);
  EXPECT_LE(max_violation(lp, s.values), kFeasibilityTol);
}

TEST(SolveLpTest, DegenerateCyclingExample) {
  // Beale's classic cycling instance; Dantzig's rule without an anti-cycling
  // fallback loops forever here.
  LinearProgram lp(4);
  lp.maximize({0.75, -150.0, 0.02, -6.0});
  lp.add_row({{0, 0.25}, {1, -60.0}, {2, -0.04}, {3, 9.0}}, R::kLessEqual, 0.0);
  lp.add_row({{0, 0.5}, {1, -90.0}, {2, -0.02}, {3, 3.0}}, R::kLessEqual, 0.0);
  lp.add_row({{2, 1.0}}, R::kLessEqual, 1.0);
  const LpSolution s = solve_lp(lp);
  ASSERT_TRUE(s.optimal());
  EXPECT_NEAR(*s.objective_value, 0.05, 1e-9);
}

TEST(SolveLpTest, DimensionMismatchIsStructuralError) {
  LinearProgram lp(2);
  lp.constraints.push_back({{1.0}, R::kLessEqual, 1.0});
  EXPECT_THROW(solve_lp(lp), StructuralError);
  EXPECT_THROW(check_feasible(lp), StructuralError);

  LinearProgram bad_objective(2);
  bad_objective.maximize({1.0});
  EXPECT_THROW(solve_lp(bad_objective), StructuralError);

  LinearProgram nonzero_feasibility(1);
  nonzero_feasibility.objective = {1.0};
  EXPECT_THROW(solve_lp(nonzero_feasibility), StructuralError);

  LinearProgram lp2(1);
  EXPECT_THROW(lp2.add_row({{3, 1.0}}, R::kLessEqual, 1.0), StructuralError);
}

// Random bounded programs: maximize c.x over {x >= 0, A x <= b} with A >= 0.
LinearProgram random_program(std::mt19937_64& rng, std::size_t n, std::size_t m) {
  std::uniform_real_distribution<double> coef(0.0, 1.0);
  std::uniform_real_distribution<double> obj(-1.0, 1.0);
  std::uniform_real_distribution<double> rhs(1.0, 4.0);
  LinearProgram lp(n);
  std::vector<double> c(n);
  for (double& v : c) v = obj(rng);
  lp.maximize(c);
  for (std::size_t j = 0; j < n; ++j) lp.add_row({{j, 1.0}}, R::kLessEqual, 3.0);
  for (std::size_t r = 0; r < m; ++r) {
    std::vector<std::pair<std::size_t, double>> terms;
    for (std::size_t j = 0; j < n; ++j) terms.emplace_back(j, coef(rng));
    lp.add_row(terms, R::kLessEqual, rhs(rng));
  }
  return lp;
}

TEST(SolveLpPropertyTest, OptimaAreFeasibleAndLocallyUnbeaten) {
  std::mt19937_64 rng(20261015);
  for (int trial = 0; trial < 40; ++trial) {
    const LinearProgram lp = random_program(rng, 2 + trial % 6, 1 + trial % 5);
    const LpSolution s = solve_lp(lp);
    ASSERT_TRUE(s.optimal());
    EXPECT_LE(max_violation(lp, s.values), kFeasibilityTol);

    // 100 random perturbations inside a box around the optimum.
    std::uniform_real_distribution<double> jitter(-0.5, 0.5);
    for (int k = 0; k < 100; ++k) {
      std::vector<double> probe = s.values;
      for (double& v : probe) v += jitter(rng);
      if (max_violation(lp, probe) > 0.0) continue;
      EXPECT_LE(objective_at(lp, probe), *s.objective_value + kOptimalityTol);
    }
  }
}

TEST(SolveLpPropertyTest, Deterministic) {
  std::mt19937_64 rng(7);
  const LinearProgram lp = random_program(rng, 6, 4);
  const LpSolution a = solve_lp(lp);
  const LpSolution b = solve_lp(lp);
  ASSERT_TRUE(a.optimal());
  EXPECT_EQ(a.values, b.values);
  EXPECT_EQ(*a.objective_value, *b.objective_value);
}

}  // namespace
}  // namespace sproute::lp
