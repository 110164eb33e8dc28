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

#include "sproute/cli/generator.hpp"

#include <random>
#include <stdexcept>

namespace sproute::cli {

routing::RoutingInstance generate_instance(const GeneratorParams& params) {
  if (params.users == 0 || params.servers == 0) {
    throw std::invalid_argument("generator needs at least one user and one server");
  }
  if (!(params.density > 0.0 && params.density <= 1.0)) {
    throw std::invalid_argument("density must lie in (0, 1]");
  }
  std::mt19937_64 rng(params.seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  auto uniform = [&](double lo, double hi) { return lo + (hi - lo) * unit(rng); };

  const std::size_t n = params.users;
  const std::size_t m = params.servers;
  routing::RoutingInstance inst;
  inst.num_users = n;
  inst.num_servers = m;
  inst.demands.resize(n);
  inst.bandwidth.assign(n, std::vector<double>(m, 0.0));
  inst.capacities.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto server = static_cast<std::size_t>(unit(rng) * static_cast<double>(m));
    inst.demands[i].server = std::min(server, m - 1);
    inst.demands[i].size = uniform(1.0, 20.0);
    for (std::size_t j = 0; j < m; ++j) {
      if (j == inst.demands[i].server) {
        inst.bandwidth[i][j] = uniform(1.0, 10.0);
      } else if (unit(rng) < params.density) {
        inst.bandwidth[i][j] = uniform(1.0, 10.0);
      }
    }
    const double direct = inst.direct_bandwidth(i);
    inst.capacities[i] = uniform(direct, direct + 20.0);
  }
  for (std::size_t from = 0; from < n; ++from) {
    for (std::size_t to = 0; to < n; ++to) {
      if (from != to && unit(rng) < params.density) inst.peer_edges.push_back({from, to});
    }
  }
  return inst;
}

}  // namespace sproute::cli
