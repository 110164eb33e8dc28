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

#include "sproute/routing/flow_lp.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

namespace sproute::routing {

using lp::Relation;

const char* family_name(Family family) {
  switch (family) {
    case Family::kTotals:
      return "totals";
    case Family::kArrival:
      return "arrival";
    case Family::kConservation:
      return "conservation";
    case Family::kIndividualRationality:
      return "individual-rationality";
    case Family::kDelay:
      return "delay";
    case Family::kVertexCapacity:
      return "vertex-capacity";
    case Family::kEdgeCapacity:
      return "edge-capacity";
    case Family::kNonNegativity:
      return "non-negativity";
  }
  return "unknown";
}

FlowAssignment FlowAssignment::zero(const RoutingInstance& inst) {
  const std::size_t n = inst.num_users;
  FlowAssignment a;
  a.totals.assign(n, 0.0);
  a.draws.assign(n, std::vector<double>(n, 0.0));
  a.peer_flows.assign(n, std::vector<double>(inst.peer_edges.size(), 0.0));
  return a;
}

FlowLpLayout::FlowLpLayout(const RoutingInstance& inst)
    : num_users_(inst.num_users), num_edges_(inst.peer_edges.size()) {
  const std::size_t n = num_users_;
  std::size_t next = n;
  draw_index_.assign(n * n, -1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      if (inst.bandwidth[k][inst.demands[i].server] > 0.0) {
        draw_index_[i * n + k] = static_cast<std::ptrdiff_t>(next++);
      }
    }
  }
  first_flow_ = next;
  num_vars_ = first_flow_ + n * num_edges_;
}

FlowLp build_flow_lp(const RoutingInstance& inst, const FlowLpOptions& options) {
  const std::size_t n = inst.num_users;
  const std::size_t num_edges = inst.peer_edges.size();
  FlowLp out;
  out.layout = FlowLpLayout(inst);
  const FlowLpLayout& L = out.layout;
  lp::LinearProgram& prog = out.program;
  prog = lp::LinearProgram(L.num_vars());

  std::vector<std::vector<std::size_t>> into(n);
  std::vector<std::vector<std::size_t>> out_of(n);
  for (std::size_t e = 0; e < num_edges; ++e) {
    out_of[inst.peer_edges[e].from].push_back(e);
    into[inst.peer_edges[e].to].push_back(e);
  }

  std::vector<std::pair<std::size_t, double>> terms;
  auto begin_family = [&](Family f) {
    out.families[static_cast<std::size_t>(f)].begin = prog.constraints.size();
  };
  auto end_family = [&](Family f) {
    out.families[static_cast<std::size_t>(f)].end = prog.constraints.size();
  };

  begin_family(Family::kTotals);
  for (std::size_t i = 0; i < n; ++i) {
    terms = {{L.total(i), 1.0}};
    for (std::size_t k = 0; k < n; ++k) {
      if (auto v = L.draw(i, k)) terms.emplace_back(*v, -1.0);
    }
    prog.add_row(terms, Relation::kEqual, 0.0);
  }
  end_family(Family::kTotals);

  begin_family(Family::kArrival);
  for (std::size_t i = 0; i < n; ++i) {
    terms = {{L.total(i), 1.0}, {*L.draw(i, i), -1.0}};
    for (std::size_t e : into[i]) terms.emplace_back(L.flow(i, e), -1.0);
    prog.add_row(terms, Relation::kEqual, 0.0);
  }
  end_family(Family::kArrival);

  begin_family(Family::kConservation);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      terms.clear();
      for (std::size_t e : out_of[j]) terms.emplace_back(L.flow(i, e), 1.0);
      for (std::size_t e : into[j]) terms.emplace_back(L.flow(i, e), -1.0);
      if (auto v = L.draw(i, j)) terms.emplace_back(*v, -1.0);
      if (!terms.empty()) prog.add_row(terms, Relation::kEqual, 0.0);
    }
  }
  end_family(Family::kConservation);

  begin_family(Family::kIndividualRationality);
  if (options.individual_rationality) {
    for (std::size_t i = 0; i < n; ++i) {
      prog.add_row({{L.total(i), 1.0}}, Relation::kGreaterEqual, inst.direct_bandwidth(i));
    }
  }
  end_family(Family::kIndividualRationality);

  begin_family(Family::kDelay);
  if (options.max_delay) {
    for (std::size_t i = 0; i < n; ++i) {
      prog.add_row({{L.total(i), 1.0}}, Relation::kGreaterEqual,
                   inst.demands[i].size / *options.max_delay);
    }
  }
  end_family(Family::kDelay);

  begin_family(Family::kVertexCapacity);
  for (std::size_t i = 0; i < n; ++i) {
    terms.clear();
    for (std::size_t j = 0; j < n; ++j) {
      if (auto v = L.draw(j, i)) terms.emplace_back(*v, 1.0);
      for (std::size_t e : into[i]) terms.emplace_back(L.flow(j, e), 1.0);
    }
    prog.add_row(terms, Relation::kLessEqual, inst.capacities[i]);
  }
  end_family(Family::kVertexCapacity);

  begin_family(Family::kEdgeCapacity);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < inst.num_servers; ++j) {
      terms.clear();
      for (std::size_t k = 0; k < n; ++k) {
        if (inst.demands[k].server != j) continue;
        if (auto v = L.draw(k, i)) terms.emplace_back(*v, 1.0);
      }
      if (!terms.empty()) prog.add_row(terms, Relation::kLessEqual, inst.bandwidth[i][j]);
    }
  }
  end_family(Family::kEdgeCapacity);

  // Family 8 is the default zero lower bound on every variable.
  const std::size_t nonneg = static_cast<std::size_t>(Family::kNonNegativity);
  out.families[nonneg] = {prog.constraints.size(), prog.constraints.size()};
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t e = 0; e < num_edges; ++e) {
      prog.set_upper_bound(L.flow(i, e), inst.capacities[inst.peer_edges[e].to]);
    }
  }
  return out;
}

lp::LinearProgram build_feasibility_lp(const RoutingInstance& inst, double max_delay) {
  return build_flow_lp(inst, {.max_delay = max_delay}).program;
}

FlowAssignment extract_assignment(const RoutingInstance& inst, const FlowLpLayout& layout,
                                  std::span<const double> values) {
  const std::size_t n = inst.num_users;
  FlowAssignment a = FlowAssignment::zero(inst);
  for (std::size_t i = 0; i < n; ++i) {
    a.totals[i] = values[layout.total(i)];
    for (std::size_t k = 0; k < n; ++k) {
      if (auto v = layout.draw(i, k)) a.draws[i][k] = values[*v];
    }
    for (std::size_t e = 0; e < inst.peer_edges.size(); ++e) {
      a.peer_flows[i][e] = values[layout.flow(i, e)];
    }
  }
  return a;
}

double FamilyResiduals::max() const { return *std::max_element(worst.begin(), worst.end()); }

FamilyResiduals check_assignment(const RoutingInstance& inst, const FlowAssignment& a,
                                 const FlowLpOptions& options) {
  const std::size_t n = inst.num_users;
  const auto& edges = inst.peer_edges;
  FamilyResiduals r;
  auto note = [&r](Family f, double violation) {
    double& slot = r.worst[static_cast<std::size_t>(f)];
    slot = std::max(slot, violation);
  };
  auto inflow = [&](std::size_t commodity, std::size_t node) {
    double s = 0.0;
    for (std::size_t e = 0; e < edges.size(); ++e) {
      if (edges[e].to == node) s += a.peer_flows[commodity][e];
    }
    return s;
  };
  auto outflow = [&](std::size_t commodity, std::size_t node) {
    double s = 0.0;
    for (std::size_t e = 0; e < edges.size(); ++e) {
      if (edges[e].from == node) s += a.peer_flows[commodity][e];
    }
    return s;
  };

  for (std::size_t i = 0; i < n; ++i) {
    double drawn = 0.0;
    for (std::size_t k = 0; k < n; ++k) drawn += a.draws[i][k];
    note(Family::kTotals, std::abs(a.totals[i] - drawn));
    note(Family::kArrival, std::abs(a.totals[i] - a.draws[i][i] - inflow(i, i)));
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      note(Family::kConservation, std::abs(outflow(i, j) - inflow(i, j) - a.draws[i][j]));
    }
    if (options.individual_rationality) {
      note(Family::kIndividualRationality, inst.direct_bandwidth(i) - a.totals[i]);
    }
    if (options.max_delay) {
      note(Family::kDelay, inst.demands[i].size / *options.max_delay - a.totals[i]);
    }
    double load = 0.0;
    for (std::size_t j = 0; j < n; ++j) load += a.draws[j][i] + inflow(j, i);
    note(Family::kVertexCapacity, load - inst.capacities[i]);
    for (std::size_t j = 0; j < inst.num_servers; ++j) {
      double used = 0.0;
      for (std::size_t k = 0; k < n; ++k) {
        if (inst.demands[k].server == j) used += a.draws[k][i];
      }
      note(Family::kEdgeCapacity, used - inst.bandwidth[i][j]);
    }
    note(Family::kNonNegativity, -a.totals[i]);
    for (double v : a.draws[i]) note(Family::kNonNegativity, -v);
    for (double v : a.peer_flows[i]) note(Family::kNonNegativity, -v);
  }
  return r;
}

std::vector<double> utilities(const RoutingInstance& inst, const FlowAssignment& assignment) {
  std::vector<double> u(inst.num_users);
  for (std::size_t i = 0; i < inst.num_users; ++i) u[i] = utility(inst, assignment.totals[i], i);
  return u;
}

}  // namespace sproute::routing
