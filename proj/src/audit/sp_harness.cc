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

#include "sproute/audit/sp_harness.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <numeric>
#include <random>

#include "sproute/lp/simplex.hpp"
#include "sproute/routing/mechanisms.hpp"

namespace sproute::audit {
namespace {

class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  double uniform(double lo, double hi) { return lo + (hi - lo) * unit_(rng_); }
  bool coin() { return unit_(rng_) < 0.5; }

 private:
  std::mt19937_64 rng_;
  std::uniform_real_distribution<double> unit_{0.0, 1.0};
};

DeviationReport make_report(std::string property, const AuditBudget& budget) {
  DeviationReport r;
  r.property = std::move(property);
  r.budget = budget;
  return r;
}

// Runs the subject; failures become error entries instead of propagating.
bool evaluate(const AuditSubject& subject, const std::vector<double>& profile, std::size_t sample,
              DeviationReport& report, std::vector<double>& utilities) {
  try {
    utilities = subject.run(profile);
    return true;
  } catch (const std::exception& e) {
    report.errors.push_back({sample, profile, e.what()});
    return false;
  }
}

// Compares a deviant run against the truthful one; every watched agent that
// gains beyond kGapTol yields its own violation.
void compare(const std::vector<double>& truthful, const std::vector<double>& before,
             const std::vector<double>& deviant, const std::vector<double>& after,
             const std::vector<std::size_t>& coalition, std::span<const std::size_t> watched,
             DeviationReport& report) {
  for (std::size_t i : watched) {
    const double gap = after[i] - before[i];
    if (!std::isfinite(gap)) continue;
    report.max_gap = std::max(report.max_gap, gap);
    if (gap > kGapTol) {
      report.violations.push_back({coalition, i, truthful, deviant, before, after, gap});
    }
  }
}

bool has_room(const AuditSubject& s, std::size_t i) { return s.truthful[i] > s.floors[i]; }

}  // namespace

DeviationReport test_strategyproofness(const AuditSubject& subject, const AuditBudget& budget) {
  DeviationReport report = make_report("sp", budget);
  const std::size_t n = subject.truthful.size();
  std::vector<std::size_t> agents;
  for (std::size_t i = 0; i < n; ++i) {
    if (has_room(subject, i)) agents.push_back(i);
  }
  std::vector<double> before;
  if (agents.empty() || !evaluate(subject, subject.truthful, 0, report, before)) return report;

  Sampler sampler(budget.seed);
  std::vector<std::size_t> tried(n, 0);
  std::vector<double> after;
  for (std::size_t k = 0; k < budget.samples; ++k) {
    const std::size_t i = agents[k % agents.size()];
    const double lo = subject.floors[i];
    const double hi = subject.truthful[i];
    const std::size_t t = tried[i]++;
    std::vector<double> deviant = subject.truthful;
    deviant[i] = t < kGridPoints ? lo + (hi - lo) * static_cast<double>(t) / kGridPoints
                                 : sampler.uniform(lo, hi);
    ++report.tested_profiles;
    if (!evaluate(subject, deviant, k + 1, report, after)) continue;
    const std::vector<std::size_t> deviator{i};
    compare(subject.truthful, before, deviant, after, deviator, deviator, report);
  }
  return report;
}

DeviationReport test_group_sp(const AuditSubject& subject, const AuditBudget& budget) {
  DeviationReport report = make_report("gsp", budget);
  const std::size_t n = subject.truthful.size();
  std::vector<std::size_t> agents;
  for (std::size_t i = 0; i < n; ++i) {
    if (has_room(subject, i)) agents.push_back(i);
  }
  std::vector<double> before;
  if (agents.empty() || !evaluate(subject, subject.truthful, 0, report, before)) return report;

  std::vector<std::size_t> everyone(n);
  std::iota(everyone.begin(), everyone.end(), std::size_t{0});
  Sampler sampler(budget.seed);
  std::vector<double> after;
  for (std::size_t k = 0; k < budget.samples; ++k) {
    std::vector<std::size_t> coalition;
    if (k % 4 == 0) {
      coalition = agents;
    } else {
      for (std::size_t i : agents) {
        if (sampler.coin()) coalition.push_back(i);
      }
      if (coalition.empty()) coalition.push_back(agents[k % agents.size()]);
    }
    std::vector<double> deviant = subject.truthful;
    for (std::size_t i : coalition)
      deviant[i] = sampler.uniform(subject.floors[i], subject.truthful[i]);
    ++report.tested_profiles;
    if (!evaluate(subject, deviant, k + 1, report, after)) continue;
    compare(subject.truthful, before, deviant, after, coalition, everyone, report);
  }
  return report;
}

DeviationReport test_ir(const AuditSubject& subject, const AuditBudget& budget) {
  DeviationReport report = make_report("ir", budget);
  const std::size_t n = subject.truthful.size();
  Sampler sampler(budget.seed);
  std::vector<double> u;
  for (std::size_t k = 0; k < std::max<std::size_t>(budget.samples, 1); ++k) {
    std::vector<double> profile = subject.truthful;
    if (k > 0) {
      for (std::size_t i = 0; i < n; ++i) {
        profile[i] = sampler.uniform(subject.floors[i], subject.truthful[i]);
      }
    }
    ++report.tested_profiles;
    if (!evaluate(subject, profile, k, report, u)) continue;
    for (std::size_t i = 0; i < n; ++i) {
      const double gap = subject.ir_floors[i] - u[i];
      if (std::isnan(gap)) continue;
      if (gap > 0.0) report.max_gap = std::max(report.max_gap, gap);
      if (gap > kGapTol) {
        report.violations.push_back({{}, i, profile, profile, {}, u, gap});
      }
    }
  }
  return report;
}

bool lex_greater(std::span<const double> lhs, std::span<const double> rhs,
                 std::span<const std::size_t> ordering, double tol, double* gap) {
  for (std::size_t q : ordering) {
    const double d = lhs[q] - rhs[q];
    if (std::abs(d) <= tol) continue;
    if (gap != nullptr) *gap = d;
    return d > 0.0;
  }
  return false;
}

DeviationReport test_serial_optimality(const routing::RoutingInstance& inst,
                                       const routing::FlowAssignment& candidate,
                                       std::span<const std::size_t> ordering,
                                       const AuditBudget& budget) {
  DeviationReport report = make_report("serial", budget);
  const std::vector<double> mine = routing::utilities(inst, candidate);
  routing::FlowLp model = routing::build_flow_lp(inst);
  Sampler sampler(budget.seed);
  for (std::size_t k = 0; k < budget.samples; ++k) {
    std::vector<double> objective(model.layout.num_vars(), 0.0);
    for (std::size_t i = 0; i < inst.num_users; ++i) {
      objective[model.layout.total(i)] = sampler.uniform(-1.0, 1.0);
    }
    model.program.maximize(std::move(objective));
    ++report.tested_profiles;
    const lp::LpSolution s = lp::solve_lp(model.program);
    if (!s.optimal()) {
      report.errors.push_back(
          {k, inst.capacities, std::string("sampler LP ") + lp::to_string(s.status)});
      continue;
    }
    const routing::FlowAssignment other = routing::extract_assignment(inst, model.layout, s.values);
    const std::vector<double> theirs = routing::utilities(inst, other);
    double gap = 0.0;
    if (lex_greater(theirs, mine, ordering, kGapTol, &gap)) {
      std::size_t agent = 0;
      for (std::size_t q : ordering) {
        if (std::abs(theirs[q] - mine[q]) > kGapTol) {
          agent = q;
          break;
        }
      }
      report.max_gap = std::max(report.max_gap, gap);
      report.violations.push_back({{}, agent, inst.capacities, inst.capacities, mine, theirs, gap});
    }
  }
  return report;
}

bool replay(const AuditSubject& subject, const Violation& v) {
  const std::vector<double> before = subject.run(v.true_profile);
  const std::vector<double> after = subject.run(v.deviant_profile);
  return after.at(v.agent) - before.at(v.agent) > kGapTol;
}

const char* to_string(RoutingMechanism mechanism) {
  switch (mechanism) {
    case RoutingMechanism::kMaxmin:
      return "maxmin";
    case RoutingMechanism::kSerial:
      return "serial";
    case RoutingMechanism::kOef:
      return "oef";
  }
  return "unknown";
}

AuditSubject routing_subject(const routing::RoutingInstance& inst, RoutingMechanism mechanism,
                             std::vector<std::size_t> ordering, std::vector<double> weights) {
  const std::size_t n = inst.num_users;
  if (ordering.empty()) {
    ordering.resize(n);
    std::iota(ordering.begin(), ordering.end(), std::size_t{0});
  }
  if (weights.empty()) weights.assign(n, 1.0);

  AuditSubject s;
  s.name = to_string(mechanism);
  s.truthful = inst.capacities;
  s.floors.resize(n);
  s.ir_floors.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const routing::IrBaseline base = routing::ir_baseline(inst, i);
    s.floors[i] = base.flow;
    s.ir_floors[i] = base.utility;
  }
  s.run = [inst, mechanism, ordering, weights](const std::vector<double>& reports) {
    const routing::RoutingInstance reported = routing::with_capacities(inst, reports);
    routing::RoutingResult r;
    switch (mechanism) {
      case RoutingMechanism::kMaxmin:
        r = routing::maxmin_route_mechanism(reported);
        break;
      case RoutingMechanism::kSerial:
        r = routing::serial_route_mechanism(reported, ordering);
        break;
      case RoutingMechanism::kOef:
        r = routing::oef_route_mechanism(reported, weights);
        break;
    }
    return routing::utilities(inst, r.assignment);
  };
  return s;
}

}  // namespace sproute::audit
