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

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "sproute/reductions/reductions.hpp"

namespace sproute {

std::vector<std::size_t> oef_ordering(std::span<const double> reports,
                                      std::span<const double> weights) {
  if (reports.size() != weights.size()) {
    throw std::invalid_argument("oef_ordering: reports and weights differ in length");
  }
  std::vector<double> contribution(reports.size());
  for (std::size_t i = 0; i < reports.size(); ++i) {
    if (!(weights[i] > 0.0)) throw std::invalid_argument("oef_ordering: weights must be positive");
    contribution[i] = weights[i] * reports[i];
  }
  std::vector<std::size_t> order(reports.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return contribution[a] > contribution[b]; });
  return order;
}

}  // namespace sproute
