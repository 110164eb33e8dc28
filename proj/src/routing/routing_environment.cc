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

#include "sproute/routing/routing_environment.hpp"

#include <cmath>
#include <string>

#include "sproute/errors.hpp"
#include "sproute/lp/linear_program.hpp"

namespace sproute::routing {

RoutingEnvironment make_routing_environment(const RoutingInstance& inst, bool outside_options) {
  RoutingEnvironment env;
  env.num_agents = inst.num_users;
  env.type_le = [](std::size_t, const double& lhs, const double& rhs) { return lhs <= rhs; };
  env.feasible = [inst](const std::vector<double>& reports, const FlowAssignment& a) {
    if (reports.size() != inst.num_users || a.totals.size() != inst.num_users) return false;
    const RoutingInstance reported = with_capacities(inst, reports);
    return check_assignment(reported, a,
                            {.max_delay = std::nullopt, .individual_rationality = false})
               .max() <= lp::kFeasibilityTol;
  };
  env.utilities = [inst](const FlowAssignment& a) { return utilities(inst, a); };
  env.empty_outcome = FlowAssignment::zero(inst);
  env.ir_baseline.resize(inst.num_users);
  for (std::size_t i = 0; i < inst.num_users; ++i) {
    env.ir_baseline[i] = outside_options ? ir_baseline(inst, i).utility : kNoOutsideOption;
  }
  return env;
}

BlackBoxAlgorithm<FlowAssignment> maxmin_algorithm(const RoutingInstance& inst,
                                                   bool individual_rationality, double tol) {
  return {ObjectiveKind::kMaxmin,
          [inst, individual_rationality, tol](const std::vector<double>& v) {
            return min_max_delay(with_capacities(inst, v), tol, individual_rationality).witness;
          }};
}

SerialAlgorithm<FlowAssignment> serial_algorithm(const RoutingInstance& inst) {
  return [inst](const std::vector<double>& v, std::span<const std::size_t> ordering) {
    return serial_route_mechanism(with_capacities(inst, v), ordering).assignment;
  };
}

UtilityReducer<FlowAssignment> flow_reducer(const RoutingInstance& inst) {
  return [inst](const FlowAssignment& a, std::size_t agent, double target) {
    const double current = a.totals.at(agent);
    if (!(target < 0.0) || !std::isfinite(target) || !(current > 0.0)) {
      throw ContractViolation("flow reducer cannot reach utility " + std::to_string(target) +
                              " for user " + std::to_string(agent + 1));
    }
    const double wanted = -inst.demands[agent].size / target;
    if (wanted > current * (1.0 + 1e-12)) {
      throw ContractViolation("flow reducer asked to raise user " + std::to_string(agent + 1));
    }
    const double scale = std::min(1.0, wanted / current);
    FlowAssignment out = a;
    out.totals[agent] = wanted;
    for (double& x : out.draws[agent]) x *= scale;
    for (double& f : out.peer_flows[agent]) f *= scale;
    return out;
  };
}

}  // namespace sproute::routing
