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
#include <cmath>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "gtest/gtest.h"
#include "sproute/cli/generator.hpp"
#include "sproute/errors.hpp"
#include "sproute/lp/simplex.hpp"
#include "sproute/routing/flow_lp.hpp"
#include "sproute/routing/instance.hpp"
#include "sproute/routing/mechanisms.hpp"
#include "sproute/routing/routing_environment.hpp"

namespace sproute::routing {
namespace {

using sproute::testing::instance_i1;
using sproute::testing::instance_i2;
using sproute::testing::instance_single;

constexpr double kTol = 1e-5;

void expect_totals(const FlowAssignment& a, const std::vector<double>& expected) {
  ASSERT_EQ(a.totals.size(), expected.size());
  for (std::size_t i = 0; i < expected.size(); ++i) {
    EXPECT_NEAR(a.totals[i], expected[i], kTol) << "user " << i;
  }
}

std::string problems_of(const RoutingInstance& inst) {
  try {
    validate_instance(inst);
  } catch (const ValidationError& e) {
    std::string all;
    for (const auto& p : e.problems()) all += p + "\n";
    return all;
  }
  return "";
}

std::vector<RoutingInstance> corpus(std::size_t count) {
  std::vector<RoutingInstance> out;
  for (std::size_t k = 0; k < count; ++k) {
    out.push_back(
        cli::generate_instance({1 + k % 5, 1 + (k / 5) % 3, 0.2 + 0.1 * (k % 4), 500 + k}));
  }
  return out;
}

TEST(ValidateInstance, FixturesAreUnchanged) {
  const auto v = validate_instance(instance_i1());
  EXPECT_TRUE(v.warnings.empty());
  EXPECT_EQ(v.instance.capacities, instance_i1().capacities);
  EXPECT_EQ(v.instance.peer_edges, instance_i1().peer_edges);
}

TEST(ValidateInstance, RejectsMissingDirectRoute) {
  auto inst = instance_i1();
  inst.bandwidth[0][0] = 0;
  EXPECT_NE(problems_of(inst).find("no direct route"), std::string::npos);
}

TEST(ValidateInstance, ClampsLowCapacity) {
  auto inst = instance_i1();
  inst.capacities[0] = 3;
  const auto v = validate_instance(inst);
  EXPECT_EQ(v.instance.capacities[0], 4.0);
  ASSERT_EQ(v.warnings.size(), 1u);
}

TEST(ValidateInstance, ListsEveryProblem) {
  auto inst = instance_i1();
  inst.capacities[1] = -1;
  inst.demands[0].server = 7;
  inst.peer_edges.push_back({1, 1});
  inst.demands[1].size = 0;
  const std::string all = problems_of(inst);
  EXPECT_NE(all.find("capacit"), std::string::npos) << all;
  EXPECT_NE(all.find("server"), std::string::npos) << all;
  EXPECT_NE(all.find("loop"), std::string::npos) << all;
  EXPECT_NE(all.find("size"), std::string::npos) << all;
}

TEST(ValidateInstance, NormalizesEdges) {
  auto inst = instance_i2();
  inst.peer_edges = {{0, 2}, {0, 1}, {0, 2}};
  const auto v = validate_instance(inst);
  EXPECT_EQ(v.instance.peer_edges, (std::vector<PeerEdge>{{0, 1}, {0, 2}}));
}

TEST(FlowLp, FeasibilityAtFixtureDelays) {
  EXPECT_TRUE(lp::check_feasible(build_feasibility_lp(instance_i1(), 1.5)));
  // D = 1 needs x_2 = 12 but at most b_22 + b_12 = 8 reaches server 2.
  EXPECT_FALSE(lp::check_feasible(build_feasibility_lp(instance_i1(), 1.0)));
  for (const auto& inst : corpus(40)) {
    EXPECT_TRUE(lp::check_feasible(build_feasibility_lp(inst, delay_bracket(inst))));
  }
}

TEST(FlowLp, FamiliesAreLaidOutInOrder) {
  const FlowLp lp = build_flow_lp(instance_i2(), {.max_delay = 3.0});
  std::size_t previous_end = 0;
  for (std::size_t f = 0; f < kNumFamilies; ++f) {
    EXPECT_EQ(lp.families[f].begin, previous_end) << family_name(static_cast<Family>(f));
    previous_end = lp.families[f].end;
  }
  EXPECT_EQ(previous_end, lp.program.constraints.size());
  EXPECT_EQ(lp.families[static_cast<std::size_t>(Family::kTotals)].size(), 3u);
  EXPECT_EQ(lp.families[static_cast<std::size_t>(Family::kArrival)].size(), 3u);
  EXPECT_EQ(lp.families[static_cast<std::size_t>(Family::kDelay)].size(), 3u);
  EXPECT_EQ(lp.families[static_cast<std::size_t>(Family::kVertexCapacity)].size(), 3u);
  // Only x_{2,1} and x_{3,1} use another user's link.
  EXPECT_TRUE(lp.layout.draw(1, 0).has_value());
  EXPECT_FALSE(lp.layout.draw(0, 1).has_value());
  const FlowLp plain =
      build_flow_lp(instance_i2(), {.max_delay = std::nullopt, .individual_rationality = false});
  EXPECT_EQ(plain.families[static_cast<std::size_t>(Family::kIndividualRationality)].size(), 0u);
  EXPECT_EQ(plain.families[static_cast<std::size_t>(Family::kDelay)].size(), 0u);
}

TEST(CheckAssignment, FlagsEachBrokenFamily) {
  const auto inst = instance_i1();
  const FlowAssignment good = maxmin_route_mechanism(inst).assignment;
  EXPECT_LE(check_assignment(inst, good).max(), 1e-7);

  FlowAssignment bad = good;
  bad.totals[1] += 1;
  auto r = check_assignment(inst, bad);
  EXPECT_GT(r.worst[static_cast<std::size_t>(Family::kTotals)], 0.5);

  bad = good;
  bad.peer_flows[1][0] = -1;
  r = check_assignment(inst, bad);
  EXPECT_GT(r.worst[static_cast<std::size_t>(Family::kNonNegativity)], 0.5);

  bad = FlowAssignment::zero(inst);
  r = check_assignment(inst, bad);
  EXPECT_GT(r.worst[static_cast<std::size_t>(Family::kIndividualRationality)], 1.0);
  EXPECT_LE(
      check_assignment(inst, bad, {.max_delay = std::nullopt, .individual_rationality = false})
          .max(),
      0.0);

  r = check_assignment(inst, good, {.max_delay = 1.0});
  EXPECT_NEAR(r.worst[static_cast<std::size_t>(Family::kDelay)], 4.0, 1e-6);
}

TEST(MinMaxDelay, Fixtures) {
  EXPECT_NEAR(min_max_delay(instance_i1()).d_star, 1.5, kTol);
  EXPECT_NEAR(min_max_delay(instance_i2()).d_star, 8.0 / 3, kTol);
  const auto single = min_max_delay(instance_single());
  EXPECT_NEAR(single.d_star, 5.0, kTol);
  expect_totals(single.witness, {2});
}

TEST(MinMaxDelay, StaysInBracketAndReturnsSmallestFeasibleProbe) {
  for (const auto& inst : corpus(40)) {
    const auto r = min_max_delay(inst);
    EXPECT_GE(r.d_star, 0.0);
    EXPECT_LE(r.d_star, delay_bracket(inst));
    ASSERT_FALSE(r.search_trace.empty());
    EXPECT_LE(r.search_trace.size(), kMaxBisectionSteps + 1);
    double smallest = std::numeric_limits<double>::infinity();
    for (const auto& probe : r.search_trace) {
      if (probe.feasible) smallest = std::min(smallest, probe.delay);
    }
    EXPECT_EQ(r.d_star, smallest);
    EXPECT_LE(check_assignment(inst, r.witness, {.max_delay = r.d_star}).max(), 1e-7);
  }
}

TEST(MaxminRoute, Fixtures) {
  auto r = maxmin_route_mechanism(instance_i1());
  expect_totals(r.assignment, {4, 8});
  ASSERT_TRUE(r.meta.d_star.has_value());
  EXPECT_NEAR(*r.meta.d_star, 1.5, kTol);
  expect_totals(maxmin_route_mechanism(instance_i2()).assignment, {2, 3, 3});

  // User 1 under-reporting v_1 = 5 leaves only 1 unit of relay room.
  const auto shaded = maxmin_route_mechanism(with_capacities(instance_i1(), {5, 10}));
  EXPECT_NEAR(*shaded.meta.d_star, 4.0, kTol);
  expect_totals(shaded.assignment, {4, 3});
  EXPECT_NEAR(utility(instance_i1(), shaded.assignment.totals[0], 0), -1.0, kTol);
}

TEST(MaxminRoute, ValuePreservationAndFeasibility) {
  for (const auto& inst : corpus(40)) {
    const auto r = maxmin_route_mechanism(inst);
    const auto u = utilities(inst, r.assignment);
    EXPECT_NEAR(*std::min_element(u.begin(), u.end()), -*r.meta.d_star,
                2 * kDelayTol * (1 + *r.meta.d_star));
    EXPECT_LE(check_assignment(inst, r.assignment).max(), 1e-7);
  }
}

TEST(SerialRoute, Fixtures) {
  const std::vector<std::size_t> q231{1, 2, 0};
  const std::vector<std::size_t> q321{2, 1, 0};
  const auto r = serial_route_mechanism(instance_i2(), q231);
  expect_totals(r.assignment, {2, 5, 1});
  EXPECT_EQ(r.meta.ordering, q231);
  EXPECT_FALSE(r.meta.d_star.has_value());
  expect_totals(serial_route_mechanism(instance_i2(), q321).assignment, {2, 1, 5});
  const std::vector<std::size_t> one{0};
  expect_totals(serial_route_mechanism(instance_single(), one).assignment, {2});
}

TEST(SerialRoute, RejectsBadOrderings) {
  const std::vector<std::size_t> repeated{0, 0, 1};
  const std::vector<std::size_t> short_order{0, 1};
  EXPECT_THROW(serial_route_mechanism(instance_i2(), repeated), std::invalid_argument);
  EXPECT_THROW(serial_route_mechanism(instance_i2(), short_order), std::invalid_argument);
}

TEST(SerialRoute, FeasibleAndIndividuallyRational) {
  for (const auto& inst : corpus(40)) {
    std::vector<std::size_t> q(inst.num_users);
    for (std::size_t i = 0; i < q.size(); ++i) q[i] = q.size() - 1 - i;
    const auto r = serial_route_mechanism(inst, q);
    EXPECT_LE(check_assignment(inst, r.assignment).max(), 1e-7);
  }
}

TEST(OefRoute, Fixtures) {
  const std::vector<double> ones{1, 1, 1};
  const auto r = oef_route_mechanism(instance_i2(), ones);
  EXPECT_EQ(r.meta.ordering, (std::vector<std::size_t>{1, 2, 0}));
  expect_totals(r.assignment, {2, 5, 1});

  // l * v = (6, 20, 30) is increasing in the index, so the order reverses.
  const std::vector<double> rising{1, 2, 3};
  EXPECT_EQ(oef_route_mechanism(instance_i2(), rising).meta.ordering,
            (std::vector<std::size_t>{2, 1, 0}));
  const std::vector<double> one{1};
  const auto single = oef_route_mechanism(instance_single(), one);
  EXPECT_EQ(single.meta.ordering, (std::vector<std::size_t>{0}));
  expect_totals(single.assignment, {2});
}

TEST(Utility, Examples) {
  const auto i1 = instance_i1();
  EXPECT_DOUBLE_EQ(utility(i1, 8, 1), -1.5);
  EXPECT_DOUBLE_EQ(utility(i1, 4, 0), -1.0);
  EXPECT_DOUBLE_EQ(utility(instance_i2(), 2, 0), -1.0);
  EXPECT_EQ(utility(i1, 0, 0), -std::numeric_limits<double>::infinity());
  EXPECT_EQ(ir_baseline(i1, 0).flow, 4.0);
  EXPECT_EQ(ir_baseline(i1, 0).utility, -1.0);
  EXPECT_EQ(ir_baseline(i1, 1).flow, 2.0);
  EXPECT_EQ(ir_baseline(i1, 1).utility, -6.0);
}

TEST(ExhaustDirectEdges, FixedPointIsReturnedUnchanged) {
  const auto inst = instance_i2();
  const auto r = maxmin_route_mechanism(inst).assignment;
  const auto once = exhaust_direct_edges(inst, r);
  const auto twice = exhaust_direct_edges(inst, once);
  EXPECT_EQ(once.totals, twice.totals);
  EXPECT_EQ(once.draws, twice.draws);
  EXPECT_EQ(once.peer_flows, twice.peer_flows);
}

TEST(ExhaustDirectEdges, MovesFlowOffTheRelay) {
  // User 2 draws 1 directly and 6 through user 1; its own link has 1 spare.
  const auto inst = instance_i1();
  FlowAssignment a = FlowAssignment::zero(inst);
  a.totals = {4, 7};
  a.draws[0][0] = 4;
  a.draws[1][1] = 1;
  a.draws[1][0] = 6;
  a.peer_flows[1][0] = 6;
  ASSERT_LE(check_assignment(inst, a).max(), 1e-9);
  const auto out = exhaust_direct_edges(inst, a);
  expect_totals(out, {4, 7});
  EXPECT_NEAR(out.draws[1][1], 2.0, 1e-7);
  EXPECT_NEAR(out.draws[1][0], 5.0, 1e-7);
  EXPECT_NEAR(out.peer_flows[1][0], 5.0, 1e-7);
  EXPECT_LE(check_assignment(inst, out).max(), 1e-7);
}

TEST(ExhaustDirectEdges, MaxminWitnessOfI2) {
  const auto inst = instance_i2();
  const auto out = exhaust_direct_edges(inst, maxmin_route_mechanism(inst).assignment);
  expect_totals(out, {2, 3, 3});
  const std::vector<double> direct{2, 1, 1};
  for (std::size_t i = 0; i < 3; ++i) EXPECT_NEAR(out.draws[i][i], direct[i], 1e-7);
}

TEST(ExhaustDirectEdges, RejectsInfeasibleInput) {
  const auto inst = instance_i1();
  FlowAssignment a = FlowAssignment::zero(inst);
  EXPECT_THROW(exhaust_direct_edges(inst, a), ContractViolation);
}

TEST(ExhaustDirectEdges, HoldsAcrossTheCorpus) {
  for (const auto& inst : corpus(30)) {
    const auto base = maxmin_route_mechanism(inst).assignment;
    const auto out = exhaust_direct_edges(inst, base);
    for (std::size_t i = 0; i < inst.num_users; ++i) {
      EXPECT_NEAR(out.totals[i], base.totals[i], 1e-7);
      EXPECT_NEAR(out.draws[i][i], inst.direct_bandwidth(i), 1e-7);
    }
    EXPECT_LE(check_assignment(inst, out).max(), 1e-7);
  }
}

TEST(FlowReducer, ScalesOneCommodity) {
  const auto inst = instance_i2();
  const auto base = maxmin_route_mechanism(inst).assignment;
  const auto reduced = flow_reducer(inst)(base, 1, -4.0);  // x_2 = 8 / 4 = 2
  EXPECT_NEAR(reduced.totals[1], 2.0, 1e-9);
  EXPECT_EQ(reduced.totals[0], base.totals[0]);
  EXPECT_EQ(reduced.totals[2], base.totals[2]);
  EXPECT_LE(
      check_assignment(inst, reduced, {.max_delay = std::nullopt, .individual_rationality = false})
          .max(),
      1e-9);
}

TEST(Monotonicity, RaisingACapacityNeverRaisesTheDelay) {
  for (const auto& inst : corpus(20)) {
    const double before = min_max_delay(inst).d_star;
    for (std::size_t i = 0; i < inst.num_users; ++i) {
      auto more = inst.capacities;
      more[i] += 3;
      EXPECT_LE(min_max_delay(with_capacities(inst, more)).d_star, before + 1e-6);
    }
  }
}

}  // namespace
}  // namespace sproute::routing
