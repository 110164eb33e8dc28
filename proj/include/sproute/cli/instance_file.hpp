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

#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "sproute/audit/sp_harness.hpp"
#include "sproute/routing/instance.hpp"
#include "sproute/routing/mechanisms.hpp"

// JSON instance and result files. Users and servers are 1-based on disk and
// 0-based in memory.
//
// Instance file:
//   { "users": 2, "servers": 2,
//     "demands":      [ {"server": 1, "size": 4}, ... ],         // per user
//     "server_edges": [ {"user": 1, "server": 1, "bandwidth": 4}, ... ],
//     "peer_edges":   [ {"from": 1, "to": 2}, ... ],  // data-flow direction
//     "capacities":   [12, 10],
//     "weights":      [1, 1] }                        // optional
namespace sproute::cli {

using Json = nlohmann::ordered_json;

struct InstanceFile {
  routing::RoutingInstance instance;
  std::vector<double> weights;  // OEF weights, all 1 when omitted
  std::vector<std::string> warnings;
};

// Parses and validates. Throws ValidationError whose messages name the
// offending line (syntax errors) or field path (schema errors).
InstanceFile parse_instance(std::string_view text);

// Canonical form: server edges sorted by (user, server), peer edges sorted,
// weights omitted when all are 1.
Json instance_to_json(const routing::RoutingInstance& inst, const std::vector<double>& weights);
std::string serialize_instance(const routing::RoutingInstance& inst,
                               const std::vector<double>& weights);

struct SolveOutput {
  std::string mechanism;
  const routing::RoutingInstance* instance = nullptr;
  const routing::RoutingResult* result = nullptr;
  std::vector<std::string> warnings;
};

Json result_to_json(const SolveOutput& out);
Json report_to_json(const audit::DeviationReport& report, std::string_view mechanism);

// Integral values are written as integers, everything else at full
// precision.
Json number(double value);

}  // namespace sproute::cli
