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

#include "sproute/routing/instance.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "sproute/errors.hpp"

namespace sproute::routing {
namespace {

std::string user_label(std::size_t i) { return "user " + std::to_string(i + 1); }

bool finite_non_negative(double v) { return std::isfinite(v) && v >= 0.0; }

}  // namespace

ValidatedInstance validate_instance(RoutingInstance inst) {
  std::vector<std::string> problems;
  const std::size_t n = inst.num_users;
  const std::size_t m = inst.num_servers;
  if (n == 0) problems.emplace_back("instance has no users");
  if (m == 0) problems.emplace_back("instance has no servers");
  if (inst.demands.size() != n) problems.emplace_back("demands must list one entry per user");
  if (inst.capacities.size() != n) problems.emplace_back("capacities must list one entry per user");
  if (inst.bandwidth.size() != n || std::any_of(inst.bandwidth.begin(), inst.bandwidth.end(),
                                                [m](const auto& row) { return row.size() != m; })) {
    problems.emplace_back("bandwidth matrix must be users x servers");
  }
  if (!problems.empty()) throw ValidationError(std::move(problems));

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      if (!finite_non_negative(inst.bandwidth[i][j])) {
        problems.push_back(user_label(i) + ": negative or non-finite bandwidth to server " +
                           std::to_string(j + 1));
      }
    }
    if (!finite_non_negative(inst.capacities[i])) {
      problems.push_back(user_label(i) + ": negative or non-finite capacity");
    }
    const Demand& d = inst.demands[i];
    if (!(std::isfinite(d.size) && d.size > 0.0)) {
      problems.push_back(user_label(i) + ": file size must be positive");
    }
    if (d.server >= m) {
      problems.push_back(user_label(i) + ": demanded server " + std::to_string(d.server + 1) +
                         " out of range");
    } else if (!(inst.bandwidth[i][d.server] > 0.0)) {
      problems.push_back(user_label(i) + ": no direct route to server " +
                         std::to_string(d.server + 1));
    }
  }
  for (const PeerEdge& e : inst.peer_edges) {
    if (e.from >= n || e.to >= n) {
      problems.push_back("peer edge " + std::to_string(e.from + 1) + "->" +
                         std::to_string(e.to + 1) + " references an unknown user");
    } else if (e.from == e.to) {
      problems.push_back("peer edge " + std::to_string(e.from + 1) + "->" +
                         std::to_string(e.to + 1) + " is a self-loop");
    }
  }
  if (!problems.empty()) throw ValidationError(std::move(problems));

  ValidatedInstance out;
  for (std::size_t i = 0; i < n; ++i) {
    const double floor = inst.direct_bandwidth(i);
    if (inst.capacities[i] < floor) {
      out.warnings.push_back(user_label(i) + ": capacity " + std::to_string(inst.capacities[i]) +
                             " below direct bandwidth, clamped to " + std::to_string(floor));
      inst.capacities[i] = floor;
    }
  }
  std::sort(inst.peer_edges.begin(), inst.peer_edges.end());
  inst.peer_edges.erase(std::unique(inst.peer_edges.begin(), inst.peer_edges.end()),
                        inst.peer_edges.end());
  out.instance = std::move(inst);
  return out;
}

double utility(const RoutingInstance& inst, double flow, std::size_t user) {
  if (!(flow > 0.0)) return -std::numeric_limits<double>::infinity();
  return -inst.demands[user].size / flow;
}

IrBaseline ir_baseline(const RoutingInstance& inst, std::size_t user) {
  const double b = inst.direct_bandwidth(user);
  return {b, -inst.demands[user].size / b};
}

RoutingInstance with_capacities(const RoutingInstance& inst, const std::vector<double>& reports) {
  RoutingInstance out = inst;
  out.capacities = reports;
  for (std::size_t i = 0; i < out.num_users; ++i) {
    out.capacities[i] = std::max(out.capacities[i], out.direct_bandwidth(i));
  }
  return out;
}

}  // namespace sproute::routing
