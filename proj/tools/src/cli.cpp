// Copyright 2026 The dso_tree Authors.
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

#include "dso_tree_cli/cli.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <sstream>

#include <spdlog/sinks/stdout_color_sinks.h>
#include <spdlog/spdlog.h>

#include "dso_tree/cost.hpp"
#include "dso_tree/feasibility.hpp"
#include "dso_tree/io.hpp"
#include "dso_tree/queue_eliminator.hpp"
#include "dso_tree/verification.hpp"

namespace dso_tree::cli {
namespace {

constexpr std::array<const char*, 7> kCommands = {"validate", "simulate",  "transform", "solve",
                                                  "check-oc", "verify", "refine"};

class Runner {
 public:
  explicit Runner(const RunConfig& config) : config_(config) {}

  template <Scalar S>
  RunResult dispatch() {
    ScenarioDocument<S> doc = load_scenario<S>(config_.scenario);
    if (config_.dt_override) doc.scenario = doc.scenario.with_dt(parse_scalar<S>(*config_.dt_override));
    spdlog::info("loaded {} origins, {} slots", doc.scenario.size(), doc.scenario.slot_count());

    const std::string& c = config_.command;
    if (c == "validate") return validate(doc);
    if (c == "simulate") return simulate_cmd(doc);
    if (c == "transform") return transform_cmd(doc);
    if (c == "solve") return solve_cmd(doc.scenario);
    if (c == "check-oc") return check_oc(doc.scenario);
    if (c == "verify") return verify(doc.scenario);
    return refine(doc.scenario);
  }

 private:
  template <Scalar S>
  S tol() const {
    if constexpr (kIsExact<S>) {
      return S(0);
    } else {
      return config_.tol;
    }
  }

  void emit(const std::string& name, const std::string& text) {
    const auto path = config_.out / name;
    write_text(path, text);
    result_.artifacts.push_back(path);
    spdlog::debug("wrote {}", path.string());
  }

  template <Scalar S>
  const InflowProfiles<S>& require_inflows(const ScenarioDocument<S>& doc) const {
    if (!doc.inflows) {
      throw ValueError("command '" + config_.command + "' needs \"inflows\" in the scenario file");
    }
    return *doc.inflows;
  }

  RunResult finish(bool ok, std::string message) {
    result_.exit_code = ok ? kExitOk : kExitCheckFailed;
    result_.message = std::move(message);
    return result_;
  }

  template <Scalar S>
  RunResult validate(const ScenarioDocument<S>& doc) {
    const Scenario<S>& sc = doc.scenario;
    std::ostringstream s;
    s << "{\n  \"valid\": true,\n  \"origins\": " << sc.size() << ",\n  \"slots\": "
      << sc.slot_count() << ",\n  \"total_demand\": \"" << format_scalar(sc.total_demand())
      << "\",\n  \"root_capacity\": \"" << format_scalar(sc.network().root_capacity())
      << "\",\n  \"has_inflows\": " << (doc.inflows ? "true" : "false") << "\n}\n";
    emit("structure.json", s.str());
    if (!doc.inflows) return finish(true, "scenario is valid");
    const FeasibilityReport report = check_feasibility(simulate(sc, *doc.inflows), tol<S>());
    emit("feasibility.json", feasibility_json(report));
    return finish(report.feasible(), report.feasible() ? "scenario and inflows are feasible"
                                                       : "inflows violate a constraint");
  }

  template <Scalar S>
  RunResult simulate_cmd(const ScenarioDocument<S>& doc) {
    const TrafficState<S> state = simulate(doc.scenario, require_inflows(doc));
    emit("state.csv", state_csv(state));
    const auto lagrangian = total_cost(state);
    emit("cost.json", cost_json(lagrangian, eulerian_cost(state)));
    return finish(true, "total cost " + format_scalar(lagrangian.total));
  }

  template <Scalar S>
  RunResult transform_cmd(const ScenarioDocument<S>& doc) {
    const TrafficState<S> state = simulate(doc.scenario, require_inflows(doc));
    const TransformResult<S> r = eliminate_queues(state, tol<S>());
    emit("transform.json", transform_json(r));
    emit("original_state.csv", state_csv(r.original));
    emit("transformed_state.csv", state_csv(r.transformed));
    emit("transformed_scenario.json", scenario_json(doc.scenario, &r.transformed_inflows));
    return finish(true, "cost delta " + format_scalar(r.cost_delta));
  }

  template <Scalar S>
  RunResult solve_cmd(const Scenario<S>& sc) {
    const LpSolution<S> sol = solve(sc);
    emit("solution.csv", solution_csv(sol));
    emit("prices.csv", price_csv(sol));
    emit("summary.json", summary_json(sol));
    try {
      const InflowProfiles<S> inflows = inflows_from_solution(sol);
      emit("lp_inflows.json", scenario_json(sc, &inflows));
    } catch (const HorizonError& e) {
      spdlog::warn("LP entry profile not exported: {}", e.what());
    }
    return finish(true, "objective " + format_scalar(sol.objective));
  }

  template <Scalar S>
  RunResult check_oc(const Scenario<S>& sc) {
    const LpSolution<S> sol = solve(sc);
    const OptimalityReport report = check_optimality(sol, sc, tol<S>());
    emit("summary.json", summary_json(sol));
    emit("optimality.json", optimality_json(report));
    return finish(report.optimal(), report.optimal() ? "optimality conditions hold"
                                                     : "optimality conditions violated");
  }

  template <Scalar S>
  RunResult verify(const Scenario<S>& sc) {
    VerificationOptions options;
    options.tol = config_.tol;
    const VerificationReport report = verify_nonexistence(sc, config_.n_samples, config_.seed, options);
    emit("verification.json", verification_json(report));
    return finish(report.passed(), std::to_string(report.summary.passed) + "/" +
                                       std::to_string(report.summary.samples) + " samples passed");
  }

  template <Scalar S>
  RunResult refine(const Scenario<S>& sc) {
    std::vector<S> steps;
    for (const auto& text : config_.dt_list) steps.push_back(parse_scalar<S>(text));
    std::ostringstream out;
    out << "dt,objective\n";
    for (const auto& row : refine_study(sc, steps)) {
      out << format_scalar(row.dt) << ',' << format_scalar(row.objective) << '\n';
    }
    emit("refine.csv", out.str());
    return finish(true, std::to_string(steps.size()) + " step sizes solved");
  }

  const RunConfig& config_;
  RunResult result_;
};

}  // namespace

void configure_logging() {
  spdlog::set_default_logger(spdlog::stderr_color_mt("dso_tree"));
  spdlog::set_level(spdlog::level::warn);
  if (const char* level = std::getenv("DSO_TREE_LOG")) {
    spdlog::set_level(spdlog::level::from_str(level));
  }
}

int exit_code_for(ErrorClass c) {
  switch (c) {
    case ErrorClass::kParse:
      return kExitParse;
    case ErrorClass::kValidation:
      return kExitValidation;
    case ErrorClass::kInfeasible:
      return kExitInfeasible;
    case ErrorClass::kCheckFailed:
      return kExitCheckFailed;
  }
  return kExitCheckFailed;
}

void validate_config(const RunConfig& config) {
  if (std::find(kCommands.begin(), kCommands.end(), config.command) == kCommands.end()) {
    throw ValueError("unknown command '" + config.command + "'");
  }
  if (!(config.tol > 0)) throw ValueError("tolerance must be positive");
  if (config.n_samples < 0) throw ValueError("n_samples must be nonnegative");
}

RunResult run(const RunConfig& config) {
  try {
    validate_config(config);
    Runner runner(config);
    RunResult result = config.exact ? runner.dispatch<Rational>() : runner.dispatch<double>();
    spdlog::info("{}: {}", config.command, result.message);
    return result;
  } catch (const Error& e) {
    RunResult result;
    result.exit_code = exit_code_for(e.error_class());
    result.message = e.kind() + ": " + e.what();
    result.error = error_json(e.kind(), error_class_name(e.error_class()), e.what());
    spdlog::error("{}", result.message);
    try {
      const auto path = config.out / "error.json";
      write_text(path, result.error);
      result.artifacts.push_back(path);
    } catch (const Error&) {
      // The output directory itself is unusable; the exit code still reports.
    }
    return result;
  } catch (const std::exception& e) {
    // Filesystem and other runtime failures outside the library's taxonomy.
    RunResult result;
    result.exit_code = kExitValidation;
    result.message = std::string("RuntimeError: ") + e.what();
    result.error = error_json("RuntimeError", "validation", e.what());
    spdlog::error("{}", result.message);
    return result;
  }
}

template <Scalar S>
std::vector<RefineRow<S>> refine_study(const Scenario<S>& scenario, const std::vector<S>& dt_list) {
  std::vector<RefineRow<S>> rows;
  for (const S& dt : dt_list) rows.push_back({dt, solve(scenario.with_dt(dt)).objective});
  return rows;
}

template std::vector<RefineRow<double>> refine_study<double>(const Scenario<double>&,
                                                             const std::vector<double>&);
template std::vector<RefineRow<Rational>> refine_study<Rational>(const Scenario<Rational>&,
                                                                 const std::vector<Rational>&);

}  // namespace dso_tree::cli
