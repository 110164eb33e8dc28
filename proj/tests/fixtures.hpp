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

#include "sproute/routing/instance.hpp"

namespace sproute::testing {

// I1: user 2 can borrow user 1's link to server 2.
//   x = (4, 8) and D* = 1.5. Hand LP: x_2 <= b_22 + b_12 = 8 caps user 2, so
//   D* >= 12 / 8; user 1's direct link gives x_1 = 4 > c_1 / 1.5.
inline routing::RoutingInstance instance_i1() {
  routing::RoutingInstance inst;
  inst.num_users = 2;
  inst.num_servers = 2;
  inst.demands = {{0, 4}, {1, 12}};
  inst.bandwidth = {{4, 6}, {0, 2}};
  inst.peer_edges = {{0, 1}};
  inst.capacities = {12, 10};
  return inst;
}

// I2: users 2 and 3 share the 4 spare units of user 1's link to server 2.
//   Maxmin: x = (2, 3, 3), D* = 8 / 3. User 1's vertex cap 6 = 2 + 4 binds.
//   Serial (2, 3, 1): x = (2, 5, 1); serial (3, 2, 1): x = (2, 1, 5).
inline routing::RoutingInstance instance_i2() {
  routing::RoutingInstance inst;
  inst.num_users = 3;
  inst.num_servers = 2;
  inst.demands = {{0, 2}, {1, 8}, {1, 8}};
  inst.bandwidth = {{2, 4}, {0, 1}, {0, 1}};
  inst.peer_edges = {{0, 1}, {0, 2}};
  inst.capacities = {6, 10, 10};
  return inst;
}

// One user on a single direct link: c = 10, b = 2, v = 5, D* = 5.
inline routing::RoutingInstance instance_single() {
  routing::RoutingInstance inst;
  inst.num_users = 1;
  inst.num_servers = 1;
  inst.demands = {{0, 10}};
  inst.bandwidth = {{2}};
  inst.capacities = {5};
  return inst;
}

}  // namespace sproute::testing
