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
#include <optional>
#include <span>
#include <vector>

#include "sproute/routing/flow_lp.hpp"
#include "sproute/routing/instance.hpp"

namespace sproute::routing {

// Absolute tolerance on the minmax delay, in seconds.
inline constexpr double kDelayTol = 1e-6;
inline constexpr std::size_t kMaxBisectionSteps = 200;
// Slack on the "x_i = x_i*" fixes between lexicographic passes.
inline constexpr double kPinSlack = 1e-9;

struct SearchProbe {
  double delay = 0.0;
  bool feasible = false;
};

struct RoutingOutcomeMeta {
  std::optional<double> d_star;
  std::vector<SearchProbe> search_trace;
  std::vector<std::size_t> ordering;  // serial and OEF runs only
};

struct RoutingResult {
  FlowAssignment assignment;
  RoutingOutcomeMeta meta;
};

struct MinMaxDelay {
  double d_star = 0.0;
  FlowAssignment witness;
  std::vector<SearchProbe> search_trace;
};

// Largest bracket end max_i c_i / b_{i,d_i}: direct routes alone meet it.
double delay_bracket(const RoutingInstance& inst);

// Bisects D over [0, delay_bracket] and returns the smallest feasible probe
// once the bracket is narrower than `tol`, with the program's solution there.
// `individual_rationality = false` drops family 4.
MinMaxDelay min_max_delay(const RoutingInstance& inst, double tol = kDelayTol,
                          bool individual_rationality = true);

// Minmax-delay mechanism. After the search, each user's total is pinned to
// b_{i,d_i} if its direct route already beats D*, else to c_i / D*, and the
// program is solved again for a concrete assignment.
RoutingResult maxmin_route_mechanism(const RoutingInstance& inst, double tol = kDelayTol);

// n lexicographic passes: pass k maximizes x_{q_k} with every earlier total
// fixed at its optimum. `ordering` holds 0-based users.
RoutingResult serial_route_mechanism(const RoutingInstance& inst,
                                     std::span<const std::size_t> ordering);

// Serial passes in the order of decreasing l_i * v_i.
RoutingResult oef_route_mechanism(const RoutingInstance& inst, std::span<const double> weights);

// Rewrites a feasible IR assignment so every user fills its own direct link
// (x_{i,i} = b_{i,d_i}) without changing any total, moving as much flow off
// relay paths as possible. Returns the input untouched when it already does.
FlowAssignment exhaust_direct_edges(const RoutingInstance& inst, const FlowAssignment& assignment);

}  // namespace sproute::routing
