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

#include "sproute/routing/mechanisms.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "sproute/errors.hpp"
#include "sproute/lp/simplex.hpp"
#include "sproute/reductions/reductions.hpp"

namespace sproute::routing {

using lp::Relation;

double delay_bracket(const RoutingInstance& inst) {
  double hi = 0.0;
  for (std::size_t i = 0; i < inst.num_users; ++i) {
    hi = std::max(hi, inst.demands[i].size / inst.direct_bandwidth(i));
  }
  return hi;
}

MinMaxDelay min_max_delay(const RoutingInstance& inst, double tol, bool individual_rationality) {
  auto probe = [&](double delay) {
    const FlowLp model =
        build_flow_lp(inst, {.max_delay = delay, .individual_rationality = individual_rationality});
    const lp::LpSolution s = lp::solve_lp(model.program);
    return s.optimal() ? std::optional(extract_assignment(inst, model.layout, s.values))
                       : std::nullopt;
  };

  MinMaxDelay result;
  double lo = 0.0;
  double hi = delay_bracket(inst);
  auto witness = probe(hi);
  result.search_trace.push_back({hi, witness.has_value()});
  if (!witness) throw InternalError("direct routes alone do not meet the bracket delay");

  for (std::size_t step = 0; step < kMaxBisectionSteps && hi - lo > tol; ++step) {
    const double mid = 0.5 * (lo + hi);
    auto found = probe(mid);
    result.search_trace.push_back({mid, found.has_value()});
    if (found) {
      hi = mid;
      witness = std::move(found);
    } else {
      lo = mid;
    }
  }
  result.d_star = hi;
  result.witness = std::move(*witness);
  return result;
}

RoutingResult maxmin_route_mechanism(const RoutingInstance& inst, double tol) {
  MinMaxDelay search = min_max_delay(inst, tol);
  const double d_star = search.d_star;

  FlowLp model = build_flow_lp(inst, {.max_delay = d_star});
  for (std::size_t i = 0; i < inst.num_users; ++i) {
    const double c = inst.demands[i].size;
    const double b = inst.direct_bandwidth(i);
    const double pinned = c / b < d_star ? b : c / d_star;
    model.program.add_row({{model.layout.total(i), 1.0}}, Relation::kEqual, pinned);
  }
  const lp::LpSolution s = lp::solve_lp(model.program);
  if (!s.optimal()) {
    throw InternalError("pinned re-solve is infeasible at D* = " + std::to_string(d_star));
  }
  RoutingResult out;
  out.assignment = extract_assignment(inst, model.layout, s.values);
  out.meta.d_star = d_star;
  out.meta.search_trace = std::move(search.search_trace);
  return out;
}

RoutingResult serial_route_mechanism(const RoutingInstance& inst,
                                     std::span<const std::size_t> ordering) {
  const std::size_t n = inst.num_users;
  std::vector<bool> seen(n, false);
  if (ordering.size() != n) throw std::invalid_argument("ordering must list every user once");
  for (std::size_t q : ordering) {
    if (q >= n || seen[q]) throw std::invalid_argument("ordering must be a permutation of users");
    seen[q] = true;
  }

  FlowLp model = build_flow_lp(inst);
  RoutingResult out;
  out.meta.ordering.assign(ordering.begin(), ordering.end());
  lp::LpSolution last;
  for (std::size_t pass = 0; pass < n; ++pass) {
    const std::size_t user = ordering[pass];
    std::vector<double> objective(model.layout.num_vars(), 0.0);
    objective[model.layout.total(user)] = 1.0;
    model.program.maximize(std::move(objective));
    last = lp::solve_lp(model.program);
    if (!last.optimal()) {
      throw InternalError("serial pass " + std::to_string(pass + 1) + " is " +
                          lp::to_string(last.status));
    }
    const double best = last.values[model.layout.total(user)];
    model.program.add_row({{model.layout.total(user), 1.0}}, Relation::kGreaterEqual,
                          best - kPinSlack);
    model.program.add_row({{model.layout.total(user), 1.0}}, Relation::kLessEqual,
                          best + kPinSlack);
  }
  if (n > 0) out.assignment = extract_assignment(inst, model.layout, last.values);
  return out;
}

RoutingResult oef_route_mechanism(const RoutingInstance& inst, std::span<const double> weights) {
  const std::vector<std::size_t> order = oef_ordering(inst.capacities, weights);
  return serial_route_mechanism(inst, order);
}

FlowAssignment exhaust_direct_edges(const RoutingInstance& inst, const FlowAssignment& assignment) {
  const std::size_t n = inst.num_users;
  if (check_assignment(inst, assignment).max() > lp::kFeasibilityTol) {
    throw ContractViolation("exhaust_direct_edges needs a feasible IR assignment");
  }
  bool exhausted = true;
  for (std::size_t i = 0; i < n; ++i) {
    exhausted = exhausted &&
                std::abs(assignment.draws[i][i] - inst.direct_bandwidth(i)) <= lp::kFeasibilityTol;
  }
  if (exhausted) return assignment;

  FlowLp model = build_flow_lp(inst);
  const FlowLpLayout& L = model.layout;
  for (std::size_t i = 0; i < n; ++i) {
    model.program.add_row({{L.total(i), 1.0}}, Relation::kEqual, assignment.totals[i]);
    model.program.add_row({{*L.draw(i, i), 1.0}}, Relation::kEqual, inst.direct_bandwidth(i));
  }
  std::vector<double> objective(L.num_vars(), 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t e = 0; e < inst.peer_edges.size(); ++e) objective[L.flow(i, e)] = -1.0;
  }
  model.program.maximize(std::move(objective));
  const lp::LpSolution s = lp::solve_lp(model.program);
  if (!s.optimal()) {
    throw ContractViolation("no assignment with exhausted direct links keeps these totals");
  }
  return extract_assignment(inst, L, s.values);
}

}  // namespace sproute::routing
