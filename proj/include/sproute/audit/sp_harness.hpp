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
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "sproute/routing/flow_lp.hpp"
#include "sproute/routing/instance.hpp"

// Empirical audits of strategy-proofness, group strategy-proofness,
// individual rationality and serial optimality. Audits only sample
// underreports; overreports are outside the solution concept.
namespace sproute::audit {

inline constexpr double kGapTol = 1e-6;
// Evenly spaced underreports tried per agent before random draws.
inline constexpr std::size_t kGridPoints = 10;

struct AuditBudget {
  std::size_t samples = 100;
  std::uint64_t seed = 0;
};

// A mechanism seen as a map from scalar reports to utilities.
struct AuditSubject {
  std::string name;
  std::vector<double> truthful;   // true types s_i
  std::vector<double> floors;     // lowest admissible report per agent
  std::vector<double> ir_floors;  // outside-option utilities r_i
  std::function<std::vector<double>(const std::vector<double>& reports)> run;
};

struct Violation {
  std::vector<std::size_t> coalition;  // agents whose reports changed
  std::size_t agent = 0;               // agent that gained
  std::vector<double> true_profile;
  std::vector<double> deviant_profile;
  std::vector<double> utility_before;
  std::vector<double> utility_after;
  double gap = 0.0;
};

struct SampleError {
  std::size_t sample = 0;
  std::vector<double> profile;
  std::string message;
};

struct DeviationReport {
  std::string property;
  std::size_t tested_profiles = 0;
  std::vector<Violation> violations;
  std::vector<SampleError> errors;
  double max_gap = 0.0;  // worst positive gap seen, violation or not
  AuditBudget budget;

  bool clean() const { return violations.empty(); }
};

// Unilateral underreports: per agent, a grid of kGridPoints reports on
// [floor, s_i) followed by uniform draws, agents taken round-robin until the
// budget is spent. Only the deviator's own utility is compared.
DeviationReport test_strategyproofness(const AuditSubject& subject, const AuditBudget& budget);

// Joint underreports by random coalitions (every fourth sample uses the grand
// coalition). A violation is any agent, inside the coalition or not, that
// strictly gains.
DeviationReport test_group_sp(const AuditSubject& subject, const AuditBudget& budget);

// Truthful runs on the given profile and on random profiles below it; flags
// u_i < r_i.
DeviationReport test_ir(const AuditSubject& subject, const AuditBudget& budget);

// Draws `budget.samples` feasible IR assignments as optima of random
// objectives over the totals and reports any whose utilities, read in
// `ordering`, lexicographically beat the candidate's.
DeviationReport test_serial_optimality(const routing::RoutingInstance& inst,
                                       const routing::FlowAssignment& candidate,
                                       std::span<const std::size_t> ordering,
                                       const AuditBudget& budget);

// Re-runs both sides of a reported violation; true iff the gap reappears.
bool replay(const AuditSubject& subject, const Violation& violation);

// True iff `lhs`, read in `ordering`, beats `rhs` by more than `tol` at the
// first position where they differ by more than `tol`. Stores that gap.
bool lex_greater(std::span<const double> lhs, std::span<const double> rhs,
                 std::span<const std::size_t> ordering, double tol, double* gap = nullptr);

enum class RoutingMechanism { kMaxmin, kSerial, kOef };

const char* to_string(RoutingMechanism mechanism);

// Wraps a routing mechanism as an audit subject over the instance's reported
// capacities. `ordering` is used by kSerial and `weights` by kOef.
AuditSubject routing_subject(const routing::RoutingInstance& inst, RoutingMechanism mechanism,
                             std::vector<std::size_t> ordering = {},
                             std::vector<double> weights = {});

}  // namespace sproute::audit
