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

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "sproute/lp/linear_program.hpp"
#include "sproute/routing/instance.hpp"

// The multi-commodity flow model behind every routing mechanism.
//
// Variables: x_i (user i's total), x_{i,k} (what user i pulls through user
// k's link to server d_i) and f_{i,e} (user i's commodity on peer edge e).
// Constraint families, in order:
//   1  x_i = sum_k x_{i,k}
//   2  x_i = x_{i,i} + sum_{e into i} f_{i,e}
//   3  sum_{e out of j} f_{i,e} = sum_{e into j} f_{i,e} + x_{i,j}   (i != j)
//   4  x_i >= b_{i,d_i}
//   5  x_i >= c_i / D                                 (only with a delay bound)
//   6  sum_j x_{j,i} + sum_{e into i} sum_j f_{j,e} <= v_i
//   7  sum_{k : d_k = j} x_{k,i} <= b_{i,j}
//   8  all variables non-negative
namespace sproute::routing {

enum class Family : std::size_t {
  kTotals = 0,
  kArrival,
  kConservation,
  kIndividualRationality,
  kDelay,
  kVertexCapacity,
  kEdgeCapacity,
  kNonNegativity,
};
inline constexpr std::size_t kNumFamilies = 8;

const char* family_name(Family family);

struct FlowAssignment {
  std::vector<double> totals;                   // x_i
  std::vector<std::vector<double>> draws;       // [i][k] = x_{i,k}
  std::vector<std::vector<double>> peer_flows;  // [i][e] = f_{i,e}, e indexes peer_edges

  static FlowAssignment zero(const RoutingInstance& inst);
};

// Variable indexing. Draw variables exist only where user k actually links to
// server d_i; all other x_{i,k} are structurally zero.
class FlowLpLayout {
 public:
  FlowLpLayout() = default;
  explicit FlowLpLayout(const RoutingInstance& inst);

  std::size_t num_vars() const { return num_vars_; }
  std::size_t total(std::size_t user) const { return user; }
  std::optional<std::size_t> draw(std::size_t user, std::size_t via) const {
    const std::ptrdiff_t v = draw_index_[user * num_users_ + via];
    return v < 0 ? std::nullopt : std::optional<std::size_t>(static_cast<std::size_t>(v));
  }
  std::size_t flow(std::size_t user, std::size_t edge) const {
    return first_flow_ + user * num_edges_ + edge;
  }

 private:
  std::size_t num_users_ = 0;
  std::size_t num_edges_ = 0;
  std::size_t first_flow_ = 0;
  std::size_t num_vars_ = 0;
  std::vector<std::ptrdiff_t> draw_index_;
};

struct RowRange {
  std::size_t begin = 0;
  std::size_t end = 0;
  std::size_t size() const { return end - begin; }
};

struct FlowLpOptions {
  std::optional<double> max_delay;     // adds family 5 for this D
  bool individual_rationality = true;  // family 4
};

struct FlowLp {
  lp::LinearProgram program;
  FlowLpLayout layout;
  std::array<RowRange, kNumFamilies> families{};
};

// Zero-objective program over families 1-8. Peer-edge flows carry an upper
// bound equal to the head's capacity, which family 6 already implies.
FlowLp build_flow_lp(const RoutingInstance& inst, const FlowLpOptions& options = {});

// Feasibility program for "every user finishes within `max_delay` seconds".
lp::LinearProgram build_feasibility_lp(const RoutingInstance& inst, double max_delay);

FlowAssignment extract_assignment(const RoutingInstance& inst, const FlowLpLayout& layout,
                                  std::span<const double> values);

struct FamilyResiduals {
  std::array<double, kNumFamilies> worst{};
  double max() const;
};

// Evaluates every constraint family directly on an assignment, independent of
// how any program was built. Families 4 and 5 follow `options`.
FamilyResiduals check_assignment(const RoutingInstance& inst, const FlowAssignment& assignment,
                                 const FlowLpOptions& options = {});

std::vector<double> utilities(const RoutingInstance& inst, const FlowAssignment& assignment);

}  // namespace sproute::routing
