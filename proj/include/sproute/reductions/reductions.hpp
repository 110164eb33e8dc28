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
#include <span>
#include <string>
#include <vector>

#include "sproute/environment/environment.hpp"
#include "sproute/errors.hpp"

// Black-box reductions from optimal allocation algorithms to strategy-proof
// mechanisms. Each mechanism runs the supplied algorithm exactly once and
// then, where needed, walks agents in index order, lowering each one's
// utility to a common target through the utility reducer.
namespace sproute {

inline constexpr double kUtilityTol = 1e-6;

enum class ObjectiveKind { kMaxmin, kTransformedMaxmin, kSerial };

// Maps a reported profile to an outcome that is optimal for `kind` over the
// feasible set of that profile. Public information is bound in.
template <typename Outcome, typename Type = double>
struct BlackBoxAlgorithm {
  ObjectiveKind kind = ObjectiveKind::kMaxmin;
  std::function<Outcome(const std::vector<Type>&)> run;
};

// Serial optimizer: the lexicographically largest utility profile read in
// `ordering`.
template <typename Outcome, typename Type = double>
using SerialAlgorithm =
    std::function<Outcome(const std::vector<Type>&, std::span<const std::size_t> ordering)>;

// Returns an outcome, feasible under the same profile, in which `agent` has
// utility `target` (no more than its current one) and everyone else keeps
// theirs.
template <typename Outcome>
using UtilityReducer = std::function<Outcome(const Outcome&, std::size_t agent, double target)>;

struct MechanismMetadata {
  std::vector<std::size_t> ordering;
  std::vector<double> targets;
  std::size_t algorithm_calls = 0;
  std::size_t reducer_calls = 0;
  std::vector<std::string> assumptions;
};

template <typename Outcome>
struct MechanismOutcome {
  Outcome outcome{};
  std::vector<double> utilities;
  // u* for the maxmin family; min_i u_i for serial runs.
  double objective_value = 0.0;
  MechanismMetadata metadata;
};

namespace detail {

inline double min_of(const std::vector<double>& values) {
  return values.empty() ? 0.0 : *std::min_element(values.begin(), values.end());
}

template <typename Outcome, typename Type>
Outcome run_algorithm(const Environment<Outcome, Type>& env,
                      const BlackBoxAlgorithm<Outcome, Type>& alg, const std::vector<Type>& profile,
                      MechanismMetadata& meta) {
  ++meta.algorithm_calls;
  Outcome o = alg.run(profile);
  if (!env.feasible(profile, o)) {
    throw ContractViolation("black-box algorithm returned an infeasible outcome");
  }
  return o;
}

// Walks agents in index order and lowers each one to targets[i], checking the
// reducer's postcondition after every call.
template <typename Outcome, typename Type>
Outcome reduce_to_targets(const Environment<Outcome, Type>& env,
                          const UtilityReducer<Outcome>& reducer, const std::vector<Type>& profile,
                          Outcome current, const std::vector<double>& targets,
                          MechanismMetadata& meta) {
  std::vector<double> u = env.utilities(current);
  for (std::size_t i = 0; i < env.num_agents; ++i) {
    if (!(u[i] > targets[i])) continue;
    ++meta.reducer_calls;
    Outcome next = reducer(current, i, targets[i]);
    const std::vector<double> v = env.utilities(next);
    const std::string who = "utility reducer broke its contract for agent " + std::to_string(i);
    if (!env.feasible(profile, next)) throw ContractViolation(who + ": outcome infeasible");
    if (std::abs(v[i] - targets[i]) > kUtilityTol) {
      throw ContractViolation(who + ": reached " + std::to_string(v[i]) + " instead of " +
                              std::to_string(targets[i]));
    }
    for (std::size_t j = 0; j < env.num_agents; ++j) {
      if (j != i && std::abs(v[j] - u[j]) > kUtilityTol) {
        throw ContractViolation(who + ": disturbed agent " + std::to_string(j));
      }
    }
    current = std::move(next);
    u = v;
  }
  return current;
}

template <typename Outcome, typename Type>
MechanismOutcome<Outcome> finish(const Environment<Outcome, Type>& env, Outcome outcome,
                                 double objective, MechanismMetadata meta) {
  MechanismOutcome<Outcome> result;
  result.utilities = env.utilities(outcome);
  result.outcome = std::move(outcome);
  result.objective_value = objective;
  result.metadata = std::move(meta);
  return result;
}

}  // namespace detail

// Runs the maxmin algorithm once, reads u* = min_i u_i, then brings every
// agent down to u*. Group strategy-proof when the environment is resource
// monotone and the reducer is valid.
template <typename Outcome, typename Type>
MechanismOutcome<Outcome> maxmin_mechanism(const Environment<Outcome, Type>& env,
                                           const BlackBoxAlgorithm<Outcome, Type>& alg,
                                           const UtilityReducer<Outcome>& reducer,
                                           const std::vector<Type>& profile) {
  MechanismMetadata meta;
  Outcome o0 = detail::run_algorithm(env, alg, profile, meta);
  const double u_star = detail::min_of(env.utilities(o0));
  meta.targets.assign(env.num_agents, u_star);
  Outcome out = detail::reduce_to_targets(env, reducer, profile, std::move(o0), meta.targets, meta);
  return detail::finish(env, std::move(out), u_star, std::move(meta));
}

// Same reduction for w(o) = min_i f_i(u_i(o)); agent i is lowered to
// f_i^{-1}(u*).
template <typename Outcome, typename Type>
MechanismOutcome<Outcome> transformed_maxmin_mechanism(
    const Environment<Outcome, Type>& env, const BlackBoxAlgorithm<Outcome, Type>& alg,
    const UtilityReducer<Outcome>& reducer, const std::vector<UtilityTransform>& transforms,
    const std::vector<Type>& profile) {
  if (transforms.size() != env.num_agents) {
    throw std::invalid_argument("one transform per agent is required");
  }
  MechanismMetadata meta;
  Outcome o0 = detail::run_algorithm(env, alg, profile, meta);
  const std::vector<double> u0 = env.utilities(o0);
  double u_star = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < env.num_agents; ++i) {
    detail::require_strictly_increasing(transforms[i], u0[i], i);
    u_star = std::min(u_star, transforms[i].apply(u0[i]));
  }
  meta.targets.resize(env.num_agents);
  for (std::size_t i = 0; i < env.num_agents; ++i) {
    const double target = transforms[i].inverse(u_star);
    if (!std::isfinite(target) || std::abs(transforms[i].apply(target) - u_star) > kUtilityTol ||
        target > u0[i] + kUtilityTol) {
      throw ContractViolation("transform of agent " + std::to_string(i) +
                              " cannot reach the common level " + std::to_string(u_star));
    }
    meta.targets[i] = std::min(target, u0[i]);
  }
  Outcome out = detail::reduce_to_targets(env, reducer, profile, std::move(o0), meta.targets, meta);
  return detail::finish(env, std::move(out), u_star, std::move(meta));
}

// Maxmin subject to individual rationality. The algorithm must respect every
// outside option; agents are then lowered to max(u*, r_i), so anyone whose
// floor sits above u* is held at the floor.
template <typename Outcome, typename Type>
MechanismOutcome<Outcome> maxmin_ir_mechanism(const Environment<Outcome, Type>& env,
                                              const BlackBoxAlgorithm<Outcome, Type>& alg_ir,
                                              const UtilityReducer<Outcome>& reducer,
                                              const std::vector<Type>& profile) {
  MechanismMetadata meta;
  Outcome o0 = detail::run_algorithm(env, alg_ir, profile, meta);
  const std::vector<double> u0 = env.utilities(o0);
  for (std::size_t i = 0; i < env.num_agents; ++i) {
    if (u0[i] < env.ir_baseline[i] - kUtilityTol) {
      throw ContractViolation("algorithm left agent " + std::to_string(i) +
                              " below its outside option");
    }
  }
  const double u_star = detail::min_of(u0);
  meta.targets.resize(env.num_agents);
  for (std::size_t i = 0; i < env.num_agents; ++i) {
    meta.targets[i] = std::min(u0[i], std::max(u_star, env.ir_baseline[i]));
  }
  Outcome out = detail::reduce_to_targets(env, reducer, profile, std::move(o0), meta.targets, meta);
  return detail::finish(env, std::move(out), u_star, std::move(meta));
}

// The serial optimizer is itself the mechanism; this only re-checks
// feasibility and individual rationality of its output.
template <typename Outcome, typename Type>
MechanismOutcome<Outcome> serial_mechanism(const Environment<Outcome, Type>& env,
                                           const SerialAlgorithm<Outcome, Type>& serial_alg,
                                           const std::vector<Type>& profile,
                                           std::span<const std::size_t> ordering) {
  MechanismMetadata meta;
  meta.ordering.assign(ordering.begin(), ordering.end());
  meta.assumptions.push_back(
      "each agent's utility under the serial optimizer is continuous in its own report "
      "(not checked)");
  ++meta.algorithm_calls;
  Outcome o = serial_alg(profile, ordering);
  if (!env.feasible(profile, o)) {
    throw ContractViolation("serial algorithm returned an infeasible outcome");
  }
  const std::vector<double> u = env.utilities(o);
  for (std::size_t i = 0; i < env.num_agents; ++i) {
    if (u[i] < env.ir_baseline[i] - kUtilityTol) {
      throw ContractViolation("serial algorithm left agent " + std::to_string(i) +
                              " below its outside option");
    }
  }
  return detail::finish(env, std::move(o), detail::min_of(u), std::move(meta));
}

// Agents sorted by weighted report l_i * s_i, largest first; equal products
// keep ascending index order. Returns 0-based agent indices.
std::vector<std::size_t> oef_ordering(std::span<const double> reports,
                                      std::span<const double> weights);

}  // namespace sproute
