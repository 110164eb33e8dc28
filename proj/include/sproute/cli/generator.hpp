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
#include <cstdint>

#include "sproute/routing/instance.hpp"

namespace sproute::cli {

struct GeneratorParams {
  std::size_t users = 3;
  std::size_t servers = 2;
  double density = 0.3;
  std::uint64_t seed = 1;
};

// Random instance, deterministic in `params`. Every user gets a direct link
// with bandwidth uniform in [1, 10]; each further user-server link and each
// ordered peer pair appears with probability `density`; v_i is uniform in
// [b_{i,d_i}, b_{i,d_i} + 20] and c_i uniform in [1, 20]. Throws
// std::invalid_argument for users or servers of 0, or density outside (0, 1].
routing::RoutingInstance generate_instance(const GeneratorParams& params);

}  // namespace sproute::cli
