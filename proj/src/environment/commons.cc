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

#include "sproute/environment/commons.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "sproute/errors.hpp"

namespace sproute::commons {
namespace {

constexpr double kPoolTol = 1e-9;

double pool(std::span<const double> reports) {
  return std::accumulate(reports.begin(), reports.end(), 0.0);
}

}  // namespace

bool feasible(std::span<const double> reports, std::span<const double> grants) {
  if (grants.size() != reports.size()) return false;
  if (std::any_of(grants.begin(), grants.end(), [](double y) { return y < 0.0; })) return false;
  return pool(grants) <= pool(reports) + kPoolTol;
}

Environment<Grants> make_environment(std::size_t num_agents) {
  Environment<Grants> env;
  env.num_agents = num_agents;
  env.type_le = [](std::size_t, const double& lhs, const double& rhs) { return lhs <= rhs; };
  env.feasible = [](const Profile& reports, const Grants& grants) {
    return feasible(reports, grants);
  };
  env.utilities = [](const Grants& grants) { return grants; };
  env.empty_outcome = Grants(num_agents, 0.0);
  env.ir_baseline.assign(num_agents, kNoOutsideOption);
  return env;
}

Grants equal_split(const Profile& reports) {
  if (reports.empty()) return {};
  return Grants(reports.size(), pool(reports) / static_cast<double>(reports.size()));
}

Grants transformed_split(const Profile& reports, const std::vector<UtilityTransform>& transforms) {
  const std::size_t n = reports.size();
  if (transforms.size() != n) throw std::invalid_argument("one transform per agent");
  const double total = pool(reports);
  // Grants needed to lift everyone to level t (nobody is granted below 0).
  auto demand = [&](double t) {
    double sum = 0.0;
    for (std::size_t i = 0; i < n; ++i) sum += std::max(0.0, transforms[i].inverse(t));
    return sum;
  };
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < n; ++i) {
    lo = std::min(lo, transforms[i].apply(0.0));
    hi = std::max(hi, transforms[i].apply(total));
  }
  for (int iter = 0; iter < 200 && hi - lo > 0.0; ++iter) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    (demand(mid) <= total ? lo : hi) = mid;
  }
  Grants grants(n);
  for (std::size_t i = 0; i < n; ++i) grants[i] = std::max(0.0, transforms[i].inverse(lo));
  return grants;
}

Grants serial_grants(const Profile& reports, std::span<const std::size_t> ordering) {
  Grants grants(reports.size(), 0.0);
  if (!ordering.empty()) grants.at(ordering.front()) = pool(reports);
  return grants;
}

Grants reduce_grant(const Grants& grants, std::size_t agent, double target) {
  if (target < 0.0 || target > grants.at(agent)) {
    throw ContractViolation("commons reducer cannot move agent " + std::to_string(agent) + " to " +
                            std::to_string(target));
  }
  Grants out = grants;
  out[agent] = target;
  return out;
}

Grants lowest_report_takes_all(const Profile& reports) {
  Grants grants(reports.size(), 0.0);
  if (reports.empty()) return grants;
  const auto lowest = std::min_element(reports.begin(), reports.end());
  grants[static_cast<std::size_t>(lowest - reports.begin())] = pool(reports);
  return grants;
}

}  // namespace sproute::commons
