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

#include "sproute/cli/instance_file.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>

#include "sproute/errors.hpp"

namespace sproute::cli {
namespace {

// Collects schema problems with their field paths.
class SchemaReader {
 public:
  explicit SchemaReader(const Json& root) : root_(root) {}

  const Json* require(const Json& obj, const std::string& key, const std::string& path) {
    if (!obj.is_object() || !obj.contains(key)) {
      problems_.push_back("missing key '" + path + key + "'");
      return nullptr;
    }
    return &obj.at(key);
  }

  std::size_t index(const Json& obj, const std::string& key, const std::string& path,
                    std::size_t limit) {
    const Json* v = require(obj, key, path);
    if (v == nullptr) return 0;
    if (!v->is_number_integer() || v->get<std::int64_t>() < 1 ||
        static_cast<std::size_t>(v->get<std::int64_t>()) > limit) {
      problems_.push_back("'" + path + key + "' must be an integer in [1, " +
                          std::to_string(limit) + "]");
      return 0;
    }
    return static_cast<std::size_t>(v->get<std::int64_t>()) - 1;
  }

  double non_negative(const Json& v, const std::string& path) {
    if (!v.is_number() || !std::isfinite(v.get<double>()) || v.get<double>() < 0.0) {
      problems_.push_back("'" + path + "' must be a finite non-negative number");
      return 0.0;
    }
    return v.get<double>();
  }

  const Json* array(const Json& obj, const std::string& key, std::size_t expected_size,
                    bool sized) {
    const Json* v = require(obj, key, "");
    if (v == nullptr) return nullptr;
    if (!v->is_array()) {
      problems_.push_back("'" + key + "' must be an array");
      return nullptr;
    }
    if (sized && v->size() != expected_size) {
      problems_.push_back("'" + key + "' has " + std::to_string(v->size()) + " entries, expected " +
                          std::to_string(expected_size) + " (one per user)");
      return nullptr;
    }
    return v;
  }

  std::vector<std::string>& problems() { return problems_; }
  const Json& root() const { return root_; }

 private:
  const Json& root_;
  std::vector<std::string> problems_;
};

}  // namespace

Json number(double value) {
  if (std::isfinite(value) && std::floor(value) == value && std::abs(value) < 1e15) {
    return Json(static_cast<std::int64_t>(value));
  }
  if (!std::isfinite(value)) return Json(nullptr);
  return Json(value);
}

InstanceFile parse_instance(std::string_view text) {
  Json root;
  try {
    root = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ValidationError({std::string("malformed JSON: ") + e.what()});
  }
  if (!root.is_object()) throw ValidationError({"instance must be a JSON object"});

  SchemaReader r(root);
  std::size_t n = 0;
  std::size_t m = 0;
  for (const auto& [key, slot] : {std::pair{"users", &n}, std::pair{"servers", &m}}) {
    const Json* v = r.require(root, key, "");
    if (v != nullptr && (!v->is_number_integer() || v->get<std::int64_t>() < 1)) {
      r.problems().push_back(std::string("'") + key + "' must be a positive integer");
    } else if (v != nullptr) {
      *slot = static_cast<std::size_t>(v->get<std::int64_t>());
    }
  }
  if (!r.problems().empty()) throw ValidationError(std::move(r.problems()));

  InstanceFile file;
  routing::RoutingInstance& inst = file.instance;
  inst.num_users = n;
  inst.num_servers = m;
  inst.demands.resize(n);
  inst.bandwidth.assign(n, std::vector<double>(m, 0.0));
  inst.capacities.assign(n, 0.0);
  file.weights.assign(n, 1.0);

  if (const Json* demands = r.array(root, "demands", n, true)) {
    for (std::size_t i = 0; i < n; ++i) {
      const std::string path = "demands[" + std::to_string(i) + "].";
      const Json& d = (*demands)[i];
      inst.demands[i].server = r.index(d, "server", path, m);
      if (const Json* size = r.require(d, "size", path)) {
        inst.demands[i].size = r.non_negative(*size, path + "size");
      }
    }
  }
  if (const Json* edges = r.array(root, "server_edges", 0, false)) {
    for (std::size_t k = 0; k < edges->size(); ++k) {
      const std::string path = "server_edges[" + std::to_string(k) + "].";
      const Json& e = (*edges)[k];
      const std::size_t user = r.index(e, "user", path, n);
      const std::size_t server = r.index(e, "server", path, m);
      if (const Json* bw = r.require(e, "bandwidth", path)) {
        inst.bandwidth[user][server] = r.non_negative(*bw, path + "bandwidth");
      }
    }
  }
  if (const Json* edges = r.array(root, "peer_edges", 0, false)) {
    for (std::size_t k = 0; k < edges->size(); ++k) {
      const std::string path = "peer_edges[" + std::to_string(k) + "].";
      const Json& e = (*edges)[k];
      const std::size_t from = r.index(e, "from", path, n);
      const std::size_t to = r.index(e, "to", path, n);
      inst.peer_edges.push_back({from, to});
    }
  }
  if (const Json* caps = r.array(root, "capacities", n, true)) {
    for (std::size_t i = 0; i < n; ++i) {
      inst.capacities[i] = r.non_negative((*caps)[i], "capacities[" + std::to_string(i) + "]");
    }
  }
  if (root.contains("weights")) {
    if (const Json* w = r.array(root, "weights", n, true)) {
      for (std::size_t i = 0; i < n; ++i) {
        const std::string path = "weights[" + std::to_string(i) + "]";
        file.weights[i] = r.non_negative((*w)[i], path);
        if (file.weights[i] <= 0.0) r.problems().push_back("'" + path + "' must be positive");
      }
    }
  }
  if (!r.problems().empty()) throw ValidationError(std::move(r.problems()));

  routing::ValidatedInstance valid = routing::validate_instance(std::move(inst));
  file.instance = std::move(valid.instance);
  file.warnings = std::move(valid.warnings);
  return file;
}

Json instance_to_json(const routing::RoutingInstance& inst, const std::vector<double>& weights) {
  Json j;
  j["users"] = inst.num_users;
  j["servers"] = inst.num_servers;
  Json demands = Json::array();
  for (const auto& d : inst.demands) {
    demands.push_back({{"server", d.server + 1}, {"size", number(d.size)}});
  }
  j["demands"] = std::move(demands);
  Json server_edges = Json::array();
  for (std::size_t i = 0; i < inst.num_users; ++i) {
    for (std::size_t s = 0; s < inst.num_servers; ++s) {
      if (inst.bandwidth[i][s] > 0.0) {
        server_edges.push_back(
            {{"user", i + 1}, {"server", s + 1}, {"bandwidth", number(inst.bandwidth[i][s])}});
      }
    }
  }
  j["server_edges"] = std::move(server_edges);
  std::vector<routing::PeerEdge> edges = inst.peer_edges;
  std::sort(edges.begin(), edges.end());
  Json peer = Json::array();
  for (const auto& e : edges) peer.push_back({{"from", e.from + 1}, {"to", e.to + 1}});
  j["peer_edges"] = std::move(peer);
  Json caps = Json::array();
  for (double v : inst.capacities) caps.push_back(number(v));
  j["capacities"] = std::move(caps);
  if (std::any_of(weights.begin(), weights.end(), [](double w) { return w != 1.0; })) {
    Json w = Json::array();
    for (double v : weights) w.push_back(number(v));
    j["weights"] = std::move(w);
  }
  return j;
}

std::string serialize_instance(const routing::RoutingInstance& inst,
                               const std::vector<double>& weights) {
  return instance_to_json(inst, weights).dump(2) + "\n";
}

namespace {

Json numbers(const std::vector<double>& values) {
  Json a = Json::array();
  for (double v : values) a.push_back(number(v));
  return a;
}

Json one_based(const std::vector<std::size_t>& indices) {
  Json a = Json::array();
  for (std::size_t i : indices) a.push_back(i + 1);
  return a;
}

}  // namespace

Json result_to_json(const SolveOutput& out) {
  const routing::RoutingInstance& inst = *out.instance;
  const routing::RoutingResult& r = *out.result;
  Json j;
  j["mechanism"] = out.mechanism;
  if (r.meta.d_star) j["d_star"] = *r.meta.d_star;
  if (!r.meta.ordering.empty()) j["ordering"] = one_based(r.meta.ordering);
  j["x"] = numbers(r.assignment.totals);
  j["utilities"] = numbers(routing::utilities(inst, r.assignment));
  std::vector<double> floors(inst.num_users);
  for (std::size_t i = 0; i < inst.num_users; ++i) floors[i] = routing::ir_baseline(inst, i).flow;
  j["ir_floors"] = numbers(floors);
  if (!r.meta.search_trace.empty()) j["search_probes"] = r.meta.search_trace.size();
  j["warnings"] = out.warnings;
  return j;
}

Json report_to_json(const audit::DeviationReport& report, std::string_view mechanism) {
  Json j;
  j["audit"] = report.property;
  j["mechanism"] = std::string(mechanism);
  j["tested_profiles"] = report.tested_profiles;
  j["max_gap"] = report.max_gap;
  j["budget"] = {{"samples", report.budget.samples}, {"seed", report.budget.seed}};
  Json violations = Json::array();
  for (const audit::Violation& v : report.violations) {
    violations.push_back({{"coalition", one_based(v.coalition)},
                          {"agent", v.agent + 1},
                          {"true_profile", numbers(v.true_profile)},
                          {"deviant_profile", numbers(v.deviant_profile)},
                          {"utility_before", numbers(v.utility_before)},
                          {"utility_after", numbers(v.utility_after)},
                          {"gap", v.gap}});
  }
  j["violations"] = std::move(violations);
  Json errors = Json::array();
  for (const audit::SampleError& e : report.errors) {
    errors.push_back(
        {{"sample", e.sample}, {"profile", numbers(e.profile)}, {"message", e.message}});
  }
  j["errors"] = std::move(errors);
  return j;
}

}  // namespace sproute::cli
