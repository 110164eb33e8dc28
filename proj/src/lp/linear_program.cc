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

#include "sproute/lp/linear_program.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "sproute/errors.hpp"

namespace sproute::lp {

std::size_t LinearProgram::add_row(std::span<const std::pair<std::size_t, double>> terms,
                                   Relation relation, double rhs) {
  Constraint row;
  row.coefficients.assign(num_vars, 0.0);
  for (const auto& [var, coef] : terms) {
    if (var >= num_vars) {
      throw StructuralError("row references variable " + std::to_string(var) + " of " +
                            std::to_string(num_vars));
    }
    row.coefficients[var] += coef;
  }
  row.relation = relation;
  row.rhs = rhs;
  constraints.push_back(std::move(row));
  return constraints.size() - 1;
}

void LinearProgram::maximize(std::vector<double> coefficients) {
  sense = Sense::kMaximize;
  objective = std::move(coefficients);
}

void LinearProgram::set_lower_bound(std::size_t var, double value) {
  if (lower_bounds.empty()) lower_bounds.assign(num_vars, 0.0);
  lower_bounds.at(var) = value;
}

void LinearProgram::set_upper_bound(std::size_t var, double value) {
  if (upper_bounds.empty()) upper_bounds.assign(num_vars, kInfinity);
  upper_bounds.at(var) = value;
}

void validate(const LinearProgram& lp) {
  const std::size_t n = lp.num_vars;
  if (!lp.objective.empty() && lp.objective.size() != n) {
    throw StructuralError("objective has " + std::to_string(lp.objective.size()) +
                          " coefficients, expected " + std::to_string(n));
  }
  for (double c : lp.objective) {
    if (!std::isfinite(c)) throw StructuralError("non-finite objective coefficient");
    if (lp.sense == Sense::kFeasibility && c != 0.0) {
      throw StructuralError("feasibility program carries a non-zero objective");
    }
  }
  if (!lp.lower_bounds.empty() && lp.lower_bounds.size() != n) {
    throw StructuralError("lower_bounds size mismatch");
  }
  if (!lp.upper_bounds.empty() && lp.upper_bounds.size() != n) {
    throw StructuralError("upper_bounds size mismatch");
  }
  for (std::size_t j = 0; j < n; ++j) {
    if (!std::isfinite(lp.lower_bound(j))) {
      throw StructuralError("variable " + std::to_string(j) + " has a non-finite lower bound");
    }
    if (std::isnan(lp.upper_bound(j))) {
      throw StructuralError("variable " + std::to_string(j) + " has a NaN upper bound");
    }
  }
  for (std::size_t r = 0; r < lp.constraints.size(); ++r) {
    const Constraint& row = lp.constraints[r];
    if (row.coefficients.size() != n) {
      throw StructuralError("constraint " + std::to_string(r) + " has " +
                            std::to_string(row.coefficients.size()) + " coefficients, expected " +
                            std::to_string(n));
    }
    if (!std::isfinite(row.rhs) || !std::all_of(row.coefficients.begin(), row.coefficients.end(),
                                                [](double a) { return std::isfinite(a); })) {
      throw StructuralError("constraint " + std::to_string(r) + " contains non-finite data");
    }
  }
}

double max_violation(const LinearProgram& lp, std::span<const double> values) {
  double worst = 0.0;
  for (std::size_t j = 0; j < lp.num_vars; ++j) {
    worst = std::max(worst, lp.lower_bound(j) - values[j]);
    worst = std::max(worst, values[j] - lp.upper_bound(j));
  }
  for (const Constraint& row : lp.constraints) {
    double activity = 0.0;
    for (std::size_t j = 0; j < lp.num_vars; ++j) {
      activity += row.coefficients[j] * values[j];
    }
    switch (row.relation) {
      case Relation::kLessEqual:
        worst = std::max(worst, activity - row.rhs);
        break;
      case Relation::kGreaterEqual:
        worst = std::max(worst, row.rhs - activity);
        break;
      case Relation::kEqual:
        worst = std::max(worst, std::abs(activity - row.rhs));
        break;
    }
  }
  return worst;
}

double objective_at(const LinearProgram& lp, std::span<const double> values) {
  double total = 0.0;
  for (std::size_t j = 0; j < lp.objective.size(); ++j) {
    total += lp.objective[j] * values[j];
  }
  return total;
}

const char* to_string(LpStatus status) {
  switch (status) {
    case LpStatus::kOptimal:
      return "optimal";
    case LpStatus::kInfeasible:
      return "infeasible";
    case LpStatus::kUnbounded:
      return "unbounded";
  }
  return "unknown";
}

}  // namespace sproute::lp
