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

#include "sproute/environment/environment.hpp"
#include "sproute/reductions/reductions.hpp"
#include "sproute/routing/flow_lp.hpp"
#include "sproute/routing/instance.hpp"
#include "sproute/routing/mechanisms.hpp"

// The route-allocation problem seen through the generic environment and
// reduction interfaces. Types are reported capacities v_i ordered by <=;
// the public part of `inst` (everything but capacities) is bound in.
namespace sproute::routing {

using RoutingEnvironment = Environment<FlowAssignment>;

// Feasibility checks families 1-3 and 6-8 under the reported capacities. With
// `outside_options`, r_i = -c_i / b_{i,d_i}; otherwise there is none.
RoutingEnvironment make_routing_environment(const RoutingInstance& inst, bool outside_options);

// Minmax-delay search as a black box; returns the witness at D*.
BlackBoxAlgorithm<FlowAssignment> maxmin_algorithm(const RoutingInstance& inst,
                                                   bool individual_rationality,
                                                   double tol = kDelayTol);

SerialAlgorithm<FlowAssignment> serial_algorithm(const RoutingInstance& inst);

// Scales every flow of the agent's commodity so its total becomes
// -c_i / target. Cancelling flow never breaks conservation or a capacity.
UtilityReducer<FlowAssignment> flow_reducer(const RoutingInstance& inst);

}  // namespace sproute::routing
