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

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <limits>
#include <string>
#include <vector>

#include "sproute/errors.hpp"

namespace sproute {

inline constexpr double kNoOutsideOption = -std::numeric_limits<double>::infinity();

// A resource-allocation environment. Private types are reported per agent as
// `Type` values; the public information is bound into the oracles when the
// environment is built, so `utilities` sees only the outcome and never the
// private reports.
template <typename Outcome, typename Type = double>
struct Environment {
  using Profile = std::vector<Type>;

  std::size_t num_agents = 0;
  // lhs <=_i rhs in agent i's type order.
  std::function<bool(std::size_t agent, const Type& lhs, const Type& rhs)> type_le;
  std::function<bool(const Profile& reports, const Outcome& outcome)> feasible;
  std::function<std::vector<double>(const Outcome& outcome)> utilities;
  // Weakly worst outcome for every agent; feasible under every profile.
  Outcome empty_outcome{};
  // Utility r_i each agent gets by staying out; kNoOutsideOption if none.
  std::vector<double> ir_baseline;

  bool profile_le(const Profile& lhs, const Profile& rhs) const {
    if (lhs.size() != num_agents || rhs.size() != num_agents) return false;
    for (std::size_t i = 0; i < num_agents; ++i) {
      if (!type_le(i, lhs[i], rhs[i])) return false;
    }
    return true;
  }
};

// A strictly increasing map on utilities, with its inverse.
struct UtilityTransform {
  std::function<double(double)> apply;
  std::function<double(double)> inverse;

  static UtilityTransform identity() {
    return {[](double u) { return u; }, [](double t) { return t; }};
  }
  // Utility gain over an outside option r.
  static UtilityTransform gain(double r) {
    return {[r](double u) { return u - r; }, [r](double t) { return t + r; }};
  }
  // Increase rate over a positive outside option r.
  static UtilityTransform rate(double r) {
    if (!(r > 0.0)) throw std::invalid_argument("rate transform needs r > 0");
    return {[r](double u) { return u / r; }, [r](double t) { return t * r; }};
  }
};

template <typename Outcome, typename Type>
double evaluate_min_utility(const Environment<Outcome, Type>& env, const Outcome& outcome,
                            const std::vector<Type>& profile) {
  if (!env.feasible(profile, outcome)) {
    throw InfeasibleOutcome("outcome is not feasible for the reported profile");
  }
  const std::vector<double> u = env.utilities(outcome);
  return u.empty() ? 0.0 : *std::min_element(u.begin(), u.end());
}

namespace detail {

// Samples each transform on a ladder around `center` and rejects any pair that
// is not strictly increasing.
inline void require_strictly_increasing(const UtilityTransform& f, double center,
                                        std::size_t agent) {
  constexpr int kSteps = 16;
  const double span = std::isfinite(center) ? std::abs(center) + 1.0 : 1.0;
  const double start = std::isfinite(center) ? center - span : -span;
  double previous = f.apply(start);
  for (int k = 1; k <= kSteps; ++k) {
    const double u = start + 2.0 * span * k / kSteps;
    const double value = f.apply(u);
    if (!(value > previous)) {
      throw InfeasibleOutcome("transform for agent " + std::to_string(agent) +
                              " is not strictly increasing near " + std::to_string(u));
    }
    previous = value;
  }
}

}  // namespace detail

template <typename Outcome, typename Type>
double evaluate_transformed_min(const Environment<Outcome, Type>& env, const Outcome& outcome,
                                const std::vector<Type>& profile,
                                const std::vector<UtilityTransform>& transforms) {
  if (transforms.size() != env.num_agents) {
    throw std::invalid_argument("one transform per agent is required");
  }
  if (!env.feasible(profile, outcome)) {
    throw InfeasibleOutcome("outcome is not feasible for the reported profile");
  }
  const std::vector<double> u = env.utilities(outcome);
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < u.size(); ++i) {
    detail::require_strictly_increasing(transforms[i], u[i], i);
    best = std::min(best, transforms[i].apply(u[i]));
  }
  return best;
}

template <typename Outcome, typename Type = double>
struct MonotonicityViolation {
  std::size_t sample = 0;
  std::vector<Type> profile;
  std::vector<Type> shrunk;
  Outcome outcome{};
};

template <typename Outcome, typename Type = double>
struct MonotonicityReport {
  std::size_t pairs_checked = 0;
  std::size_t outcomes_checked = 0;
  std::vector<MonotonicityViolation<Outcome, Type>> violations;

  bool clean() const { return violations.empty(); }
};

// Looks for an outcome that is feasible under a shrunken profile but not under
// the original. `candidates` proposes outcomes for the shrunken profile (for
// instance the algorithm's own output). Pairs where `shrunk[k]` is not below
// `profiles[k]` are skipped. An empty report is evidence, not proof.
template <typename Outcome, typename Type>
MonotonicityReport<Outcome, Type> check_resource_monotonicity(
    const Environment<Outcome, Type>& env, const std::vector<std::vector<Type>>& profiles,
    const std::vector<std::vector<Type>>& shrunk,
    const std::function<std::vector<Outcome>(const std::vector<Type>&)>& candidates) {
  MonotonicityReport<Outcome, Type> report;
  const std::size_t pairs = std::min(profiles.size(), shrunk.size());
  for (std::size_t k = 0; k < pairs; ++k) {
    if (!env.profile_le(shrunk[k], profiles[k])) continue;
    ++report.pairs_checked;
    for (const Outcome& o : candidates(shrunk[k])) {
      ++report.outcomes_checked;
      if (env.feasible(shrunk[k], o) && !env.feasible(profiles[k], o)) {
        report.violations.push_back({k, profiles[k], shrunk[k], o});
      }
    }
  }
  return report;
}

}  // namespace sproute
