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
#include <string>
#include <vector>

namespace sproute::routing {

struct Demand {
  std::size_t server = 0;  // 0-based index of q_{d_i}
  double size = 0.0;       // c_i, flow units x seconds
};

// Directed peer link carrying data from `from` to `to`. Unbounded.
struct PeerEdge {
  std::size_t from = 0;
  std::size_t to = 0;

  friend bool operator==(const PeerEdge&, const PeerEdge&) = default;
  friend auto operator<=>(const PeerEdge&, const PeerEdge&) = default;
};

// Public network plus the reported vertex capacities. All indices 0-based.
struct RoutingInstance {
  std::size_t num_users = 0;
  std::size_t num_servers = 0;
  std::vector<Demand> demands;                 // per user
  std::vector<std::vector<double>> bandwidth;  // [user][server]; 0 = no link
  std::vector<PeerEdge> peer_edges;
  std::vector<double> capacities;  // reported v_i

  double direct_bandwidth(std::size_t user) const { return bandwidth[user][demands[user].server]; }
};

struct ValidatedInstance {
  RoutingInstance instance;
  std::vector<std::string> warnings;
};

// Rejects malformed instances (throws ValidationError listing every problem),
// clamps reports below the direct bandwidth up to it with a warning, and
// sorts and de-duplicates the peer edge list.
ValidatedInstance validate_instance(RoutingInstance instance);

// -c_i / x_i; -inf when x_i <= 0.
double utility(const RoutingInstance& inst, double flow, std::size_t user);

struct IrBaseline {
  double flow = 0.0;     // b_{i,d_i}
  double utility = 0.0;  // -c_i / b_{i,d_i}
};

IrBaseline ir_baseline(const RoutingInstance& inst, std::size_t user);

// Copy of `inst` with the capacities replaced, re-clamped to the direct
// bandwidths.
RoutingInstance with_capacities(const RoutingInstance& inst, const std::vector<double>& reports);

}  // namespace sproute::routing
