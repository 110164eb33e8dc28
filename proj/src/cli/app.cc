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

#include "sproute/cli/app.hpp"

#include <fstream>
#include <functional>
#include <iomanip>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "sproute/audit/sp_harness.hpp"
#include "sproute/cli/generator.hpp"
#include "sproute/cli/instance_file.hpp"
#include "sproute/errors.hpp"
#include "sproute/reductions/reductions.hpp"
#include "sproute/routing/mechanisms.hpp"

namespace sproute::cli {
namespace {

InstanceFile load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError({"cannot read '" + path + "'"});
  std::ostringstream text;
  text << in.rdbuf();
  try {
    return parse_instance(text.str());
  } catch (const ValidationError& e) {
    std::vector<std::string> problems;
    for (const std::string& p : e.problems()) problems.push_back(path + ": " + p);
    throw ValidationError(std::move(problems));
  }
}

// --order takes 1-based user ids.
std::vector<std::size_t> to_ordering(const std::vector<std::size_t>& order, std::size_t n) {
  if (order.empty()) {
    std::vector<std::size_t> identity(n);
    for (std::size_t i = 0; i < n; ++i) identity[i] = i;
    return identity;
  }
  std::vector<std::size_t> zero_based;
  std::vector<bool> seen(n, false);
  for (std::size_t id : order) {
    if (id < 1 || id > n || seen[id - 1]) {
      throw ValidationError({"--order must be a permutation of 1.." + std::to_string(n)});
    }
    seen[id - 1] = true;
    zero_based.push_back(id - 1);
  }
  if (zero_based.size() != n) {
    throw ValidationError({"--order must be a permutation of 1.." + std::to_string(n)});
  }
  return zero_based;
}

void print_warnings(const std::vector<std::string>& warnings, std::ostream& err) {
  for (const std::string& w : warnings) err << "warning: " << w << "\n";
}

void print_solve_pretty(const Json& j, std::ostream& out) {
  out << "mechanism: " << j["mechanism"].get<std::string>() << "\n";
  if (j.contains("d_star")) out << "max delay: " << j["d_star"].get<double>() << "\n";
  if (j.contains("ordering")) {
    out << "ordering:";
    for (const auto& v : j["ordering"]) out << " " << v.get<std::size_t>();
    out << "\n";
  }
  out << std::left << std::setw(6) << "user" << std::setw(14) << "flow" << std::setw(14)
      << "utility" << "direct" << "\n";
  for (std::size_t i = 0; i < j["x"].size(); ++i) {
    out << std::setw(6) << i + 1 << std::setw(14) << j["x"][i].get<double>() << std::setw(14)
        << j["utilities"][i].get<double>() << j["ir_floors"][i].get<double>() << "\n";
  }
}

void print_audit_pretty(const Json& j, std::ostream& out) {
  out << "audit: " << j["audit"].get<std::string>() << " on " << j["mechanism"].get<std::string>()
      << "\n"
      << "tested profiles: " << j["tested_profiles"].get<std::size_t>() << "\n"
      << "violations: " << j["violations"].size() << "\n"
      << "errors: " << j["errors"].size() << "\n"
      << "max gap: " << j["max_gap"].get<double>() << "\n";
  for (const auto& v : j["violations"]) {
    out << "  agent " << v["agent"].get<std::size_t>() << " gains " << v["gap"].get<double>()
        << " with reports " << v["deviant_profile"].dump() << "\n";
  }
}

struct Options {
  std::string file;
  std::vector<std::size_t> order;
  std::string mechanism = "maxmin";
  std::size_t budget = 100;
  std::uint64_t seed = 7;
  bool pretty = false;
  GeneratorParams gen;
};

int solve(const std::string& mechanism, const Options& opt, std::ostream& out, std::ostream& err) {
  InstanceFile file = load(opt.file);
  print_warnings(file.warnings, err);
  routing::RoutingResult result;
  if (mechanism == "maxmin") {
    result = routing::maxmin_route_mechanism(file.instance);
  } else if (mechanism == "serial") {
    const auto ordering = to_ordering(opt.order, file.instance.num_users);
    result = routing::serial_route_mechanism(file.instance, ordering);
  } else {
    result = routing::oef_route_mechanism(file.instance, file.weights);
  }
  const Json j = result_to_json({mechanism, &file.instance, &result, file.warnings});
  if (opt.pretty) {
    print_solve_pretty(j, out);
  } else {
    out << j.dump(2) << "\n";
  }
  return kExitOk;
}

audit::RoutingMechanism parse_mechanism(const std::string& name) {
  if (name == "maxmin") return audit::RoutingMechanism::kMaxmin;
  if (name == "serial") return audit::RoutingMechanism::kSerial;
  return audit::RoutingMechanism::kOef;
}

int run_audit(const std::string& property, const Options& opt, std::ostream& out,
              std::ostream& err) {
  InstanceFile file = load(opt.file);
  print_warnings(file.warnings, err);
  const routing::RoutingInstance& inst = file.instance;
  const audit::AuditBudget budget{opt.budget, opt.seed};
  const audit::RoutingMechanism mech = parse_mechanism(opt.mechanism);
  const auto ordering = to_ordering(opt.order, inst.num_users);

  audit::DeviationReport report;
  if (property == "serial") {
    if (mech == audit::RoutingMechanism::kMaxmin) {
      throw ValidationError({"audit serial needs --mechanism serial or oef"});
    }
    std::vector<std::size_t> used = ordering;
    if (mech == audit::RoutingMechanism::kOef) {
      used = oef_ordering(inst.capacities, file.weights);
    }
    const routing::RoutingResult result = routing::serial_route_mechanism(inst, used);
    report = audit::test_serial_optimality(inst, result.assignment, used, budget);
  } else {
    const audit::AuditSubject subject = audit::routing_subject(inst, mech, ordering, file.weights);
    if (property == "sp") {
      report = audit::test_strategyproofness(subject, budget);
    } else if (property == "gsp") {
      report = audit::test_group_sp(subject, budget);
    } else {
      report = audit::test_ir(subject, budget);
    }
  }
  const Json j = report_to_json(report, opt.mechanism);
  if (opt.pretty) {
    print_audit_pretty(j, out);
  } else {
    out << j.dump(2) << "\n";
  }
  for (const audit::SampleError& e : report.errors) {
    err << "sample " << e.sample << " failed: " << e.message << "\n";
  }
  if (!report.errors.empty()) return kExitInternal;
  return report.clean() ? kExitOk : kExitViolation;
}

int validate_file(const Options& opt, std::ostream& out, std::ostream& err) {
  InstanceFile file = load(opt.file);
  print_warnings(file.warnings, err);
  Json j;
  j["valid"] = true;
  j["users"] = file.instance.num_users;
  j["servers"] = file.instance.num_servers;
  j["warnings"] = file.warnings;
  out << (opt.pretty ? "valid\n" : j.dump(2) + "\n");
  return kExitOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Strategy-proof bandwidth sharing over peer relays", "sproute"};
  app.require_subcommand(1);
  Options opt;
  std::function<int()> action;

  const std::vector<std::string> mechanisms{"maxmin", "serial", "oef"};

  CLI::App* solve_cmd = app.add_subcommand("solve", "Run a mechanism on an instance");
  solve_cmd->require_subcommand(1);
  for (const std::string& name : mechanisms) {
    CLI::App* sub = solve_cmd->add_subcommand(name, name + " mechanism");
    sub->add_option("file", opt.file, "Instance JSON")->required();
    sub->add_flag("--pretty", opt.pretty, "Print a table instead of JSON");
    if (name == "serial") {
      sub->add_option("--order", opt.order, "Priority order of users, 1-based")->delimiter(',');
    }
    sub->callback([&, name] { action = [&, name] { return solve(name, opt, out, err); }; });
  }

  CLI::App* audit_cmd = app.add_subcommand("audit", "Search for profitable deviations");
  audit_cmd->require_subcommand(1);
  const std::vector<std::pair<std::string, std::string>> audits{
      {"sp", "Unilateral misreports"},
      {"gsp", "Coalition misreports"},
      {"ir", "Individual rationality"},
      {"serial", "Lexicographic optimality of the serial outcome"}};
  for (const auto& [name, help] : audits) {
    CLI::App* sub = audit_cmd->add_subcommand(name, help);
    sub->add_option("file", opt.file, "Instance JSON")->required();
    sub->add_option("--budget", opt.budget, "Number of sampled profiles")
        ->check(CLI::PositiveNumber);
    sub->add_option("--seed", opt.seed, "Random seed");
    sub->add_option("--mechanism", opt.mechanism, "maxmin, serial or oef")
        ->check(CLI::IsMember(mechanisms));
    sub->add_option("--order", opt.order, "Serial priority order, 1-based")->delimiter(',');
    sub->add_flag("--pretty", opt.pretty, "Print a summary instead of JSON");
    sub->callback([&, name] { action = [&, name] { return run_audit(name, opt, out, err); }; });
  }

  CLI::App* gen_cmd = app.add_subcommand("gen", "Generate a random instance");
  gen_cmd->add_option("--users", opt.gen.users)->required()->check(CLI::PositiveNumber);
  gen_cmd->add_option("--servers", opt.gen.servers)->required()->check(CLI::PositiveNumber);
  gen_cmd->add_option("--seed", opt.gen.seed)->required();
  gen_cmd->add_option("--density", opt.gen.density)->check(CLI::Range(0.0, 1.0));
  gen_cmd->callback([&] {
    action = [&] {
      const routing::RoutingInstance inst = generate_instance(opt.gen);
      out << serialize_instance(inst, std::vector<double>(inst.num_users, 1.0));
      return kExitOk;
    };
  });

  CLI::App* validate_cmd = app.add_subcommand("validate", "Check an instance file");
  validate_cmd->add_option("file", opt.file, "Instance JSON")->required();
  validate_cmd->add_flag("--pretty", opt.pretty);
  validate_cmd->callback([&] { action = [&] { return validate_file(opt, out, err); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << "run with --help for usage\n";
    return kExitInvalid;
  }

  try {
    return action();
  } catch (const ValidationError& e) {
    for (const std::string& p : e.problems()) err << "invalid: " << p << "\n";
    return kExitInvalid;
  } catch (const std::invalid_argument& e) {
    err << "invalid: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
}

}  // namespace sproute::cli
