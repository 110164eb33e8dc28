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

#pragma once

#include <cstddef>
#include <limits>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace sproute::lp {

// Absolute tolerances shared by the solver and by every caller that checks
// its output.
inline constexpr double kFeasibilityTol = 1e-7;
inline constexpr double kOptimalityTol = 1e-6;
inline constexpr double kPivotTol = 1e-9;

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

enum class Relation { kLessEqual, kEqual, kGreaterEqual };

enum class Sense {
  kMaximize,
  // Pure feasibility problem: the objective must be absent or all zero.
  kFeasibility,
};

struct Constraint {
  std::vector<double> coefficients;  // dense, length num_vars
  Relation relation = Relation::kLessEqual;
  double rhs = 0.0;
};

// A linear program over `num_vars` variables. Every variable has a finite
// lower bound (0 unless overridden) and an optional upper bound.
struct LinearProgram {
  std::size_t num_vars = 0;
  Sense sense = Sense::kFeasibility;
  std::vector<double> objective;  // empty means all zero
  std::vector<Constraint> constraints;
  std::vector<double> lower_bounds;  // empty means all zero
  std::vector<double> upper_bounds;  // empty means all +inf

  LinearProgram() = default;
  explicit LinearProgram(std::size_t n) : num_vars(n) {}

  // Appends a row given as sparse (index, coefficient) terms. Repeated
  // indices accumulate.
  std::size_t add_row(std::span<const std::pair<std::size_t, double>> terms, Relation relation,
                      double rhs);
  std::size_t add_row(std::initializer_list<std::pair<std::size_t, double>> terms,
                      Relation relation, double rhs) {
    return add_row(std::span(terms.begin(), terms.size()), relation, rhs);
  }

  void maximize(std::vector<double> coefficients);
  void set_lower_bound(std::size_t var, double value);
  void set_upper_bound(std::size_t var, double value);

  double lower_bound(std::size_t var) const {
    return lower_bounds.empty() ? 0.0 : lower_bounds[var];
  }
  double upper_bound(std::size_t var) const {
    return upper_bounds.empty() ? kInfinity : upper_bounds[var];
  }
};

enum class LpStatus { kOptimal, kInfeasible, kUnbounded };

struct LpSolution {
  LpStatus status = LpStatus::kInfeasible;
  std::vector<double> values;             // filled iff kOptimal
  std::optional<double> objective_value;  // set iff kOptimal
  std::size_t iterations = 0;

  bool optimal() const { return status == LpStatus::kOptimal; }
};

// Throws StructuralError when the program is malformed.
void validate(const LinearProgram& lp);

// Largest violation over all rows and variable bounds at `values`.
double max_violation(const LinearProgram& lp, std::span<const double> values);

double objective_at(const LinearProgram& lp, std::span<const double> values);

const char* to_string(LpStatus status);

}  // namespace sproute::lp
