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
#include <span>
#include <vector>

#include "sproute/environment/environment.hpp"

// Reference environment: every agent contributes s_i >= 0 divisible units to
// a shared pool and receives a grant y_i >= 0 with sum(y) <= sum(s).
// Utilities are the grants themselves and nobody has an outside option.
namespace sproute::commons {

using Grants = std::vector<double>;
using Profile = std::vector<double>;

Environment<Grants> make_environment(std::size_t num_agents);

bool feasible(std::span<const double> reports, std::span<const double> grants);

// Equal split of the pool: the maxmin optimum.
Grants equal_split(const Profile& reports);

// Maximizes min_i f_i(y_i) over the pool by bisection on the common level.
Grants transformed_split(const Profile& reports, const std::vector<UtilityTransform>& transforms);

// Lexicographically best grants for `ordering`: its first agent takes the pool.
Grants serial_grants(const Profile& reports, std::span<const std::size_t> ordering);

// Lowers agent i's grant to `target`.
Grants reduce_grant(const Grants& grants, std::size_t agent, double target);

// Negative control: the lowest reporter (ties to the lowest index) takes the
// whole pool, so shading one's report pays off.
Grants lowest_report_takes_all(const Profile& reports);

}  // namespace sproute::commons
