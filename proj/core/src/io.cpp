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

#include "dso_tree/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace dso_tree {
namespace {

using Json = nlohmann::ordered_json;

template <Scalar S>
S read_number(const Json& v, const std::string& where) {
  if (v.is_string()) {
    try {
      return parse_scalar<S>(v.get<std::string>());
    } catch (const ParseError& e) {
      throw ParseError(where + ": " + e.what());
    }
  }
  if (v.is_number_integer()) return S(v.get<long long>());
  if (v.is_number_float()) {
    const double x = v.get<double>();
    if constexpr (kIsExact<S>) {
      return shortest_rational(x);
    } else {
      return x;
    }
  }
  throw ParseError(where + " must be a number or a numeric string");
}

const Json& field(const Json& object, const char* key, const std::string& where) {
  if (!object.is_object()) throw ParseError(where + " must be an object");
  const auto it = object.find(key);
  if (it == object.end()) throw ParseError(where + " is missing \"" + key + "\"");
  return *it;
}

int read_int(const Json& v, const std::string& where) {
  if (!v.is_number_integer()) throw ParseError(where + " must be an integer");
  return v.get<int>();
}

template <Scalar S>
std::vector<S> read_numbers(const Json& v, const std::string& where) {
  if (!v.is_array()) throw ParseError(where + " must be an array");
  std::vector<S> out;
  for (std::size_t k = 0; k < v.size(); ++k) {
    out.push_back(read_number<S>(v[k], where + "[" + std::to_string(k) + "]"));
  }
  return out;
}

// Exact values as strings, doubles as numbers.
template <Scalar S>
Json scalar_json(const S& x) {
  if constexpr (kIsExact<S>) {
    return format_scalar(x);
  } else {
    return x;
  }
}

// A double for plotting, plus the exact value alongside in exact mode.
template <Scalar S>
void put(Json& j, const std::string& key, const S& x) {
  j[key] = to_double(x);
  if constexpr (kIsExact<S>) j[key + "_exact"] = format_scalar(x);
}

Json verdict_json(const ConstraintVerdict& v) {
  Json j;
  j["name"] = v.name;
  j["pass"] = v.pass;
  j["worst_violation"] = v.worst_violation;
  j["link"] = v.link;
  j["time"] = v.time;
  return j;
}

template <Scalar S>
Json cost_block(const CostBreakdown<S>& c) {
  Json j;
  put(j, "schedule", c.schedule);
  put(j, "queueing", c.queueing);
  put(j, "free_flow", c.free_flow);
  put(j, "total", c.total);
  return j;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace

template <Scalar S>
ScenarioDocument<S> parse_scenario(std::string_view text) {
  Json root;
  try {
    root = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("scenario is not valid JSON: ") + e.what());
  }
  if (!root.is_object()) throw ParseError("scenario must be a JSON object");

  const Json& nodes = field(root, "nodes", "scenario");
  if (!nodes.is_array()) throw ParseError("\"nodes\" must be an array");
  const int n = static_cast<int>(nodes.size());
  std::vector<int> parents(n, -1);
  std::vector<S> mu(n), d(n), demand(n);
  std::vector<bool> seen(n, false);
  for (int k = 0; k < n; ++k) {
    const std::string where = "nodes[" + std::to_string(k) + "]";
    const Json& node = nodes[k];
    const int id = read_int(field(node, "id", where), where + ".id");
    if (id < 1 || id > n || seen[id - 1]) {
      throw IndexError(where + ".id = " + std::to_string(id) +
                       "; node ids must be 1..N, each used once");
    }
    seen[id - 1] = true;
    parents[id - 1] = read_int(field(node, "parent", where), where + ".parent");
    mu[id - 1] = read_number<S>(field(node, "mu", where), where + ".mu");
    d[id - 1] = read_number<S>(field(node, "d", where), where + ".d");
    demand[id - 1] = read_number<S>(field(node, "Q", where), where + ".Q");
  }

  const Json& cost = field(root, "cost", "scenario");
  ScheduleCost<S> schedule(read_number<S>(field(cost, "t_star", "cost"), "cost.t_star"),
                           read_number<S>(field(cost, "beta", "cost"), "cost.beta"),
                           read_number<S>(field(cost, "gamma", "cost"), "cost.gamma"));
  const std::vector<S> horizon = read_numbers<S>(field(root, "horizon", "scenario"), "horizon");
  if (horizon.size() != 2) throw ParseError("\"horizon\" must hold exactly two numbers");
  const S dt = read_number<S>(field(root, "dt", "scenario"), "dt");

  ScenarioDocument<S> doc{Scenario<S>(TreeNetwork<S>(parents, mu, d), demand, schedule,
                                      horizon[0], horizon[1], dt),
                          std::nullopt};

  if (const auto it = root.find("inflows"); it != root.end()) {
    if (!it->is_array()) throw ParseError("\"inflows\" must be an array");
    InflowProfiles<S> inflows(n + 1);
    for (std::size_t k = 0; k < it->size(); ++k) {
      const std::string where = "inflows[" + std::to_string(k) + "]";
      const Json& entry = (*it)[k];
      const int origin = read_int(field(entry, "origin", where), where + ".origin");
      if (origin < 1 || origin > n) {
        throw IndexError(where + ".origin = " + std::to_string(origin) + " is not a node");
      }
      inflows[origin] =
          StepFunction<S>(read_numbers<S>(field(entry, "breakpoints", where), where + ".breakpoints"),
                          read_numbers<S>(field(entry, "rates", where), where + ".rates"));
    }
    doc.inflows = std::move(inflows);
  }
  return doc;
}

template <Scalar S>
ScenarioDocument<S> load_scenario(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read scenario file " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_scenario<S>(buffer.str());
}

template <Scalar S>
std::string scenario_json(const Scenario<S>& scenario, const InflowProfiles<S>* inflows) {
  Json root;
  Json nodes = Json::array();
  for (int i = 1; i <= scenario.size(); ++i) {
    Json node;
    node["id"] = i;
    node["parent"] = scenario.topology().parent(i);
    node["mu"] = scalar_json(scenario.network().capacity(i));
    node["d"] = scalar_json(scenario.network().free_flow(i));
    node["Q"] = scalar_json(scenario.demand(i));
    nodes.push_back(node);
  }
  root["nodes"] = nodes;
  Json cost;
  cost["t_star"] = scalar_json(scenario.cost().t_star);
  cost["beta"] = scalar_json(scenario.cost().early_slope);
  cost["gamma"] = scalar_json(scenario.cost().late_slope);
  root["cost"] = cost;
  root["horizon"] = Json::array({scalar_json(scenario.t_start()), scalar_json(scenario.t_end())});
  root["dt"] = scalar_json(scenario.dt());
  if (inflows) {
    Json list = Json::array();
    for (int i = 1; i < static_cast<int>(inflows->size()); ++i) {
      const auto& f = (*inflows)[i];
      if (f.empty()) continue;
      Json entry;
      entry["origin"] = i;
      Json bps = Json::array();
      for (const auto& b : f.breakpoints()) bps.push_back(scalar_json(b));
      Json rates = Json::array();
      for (const auto& v : f.values()) rates.push_back(scalar_json(v));
      entry["breakpoints"] = bps;
      entry["rates"] = rates;
      list.push_back(entry);
    }
    root["inflows"] = list;
  }
  return dump(root);
}

template <Scalar S>
std::string state_csv(const TrafficState<S>& state) {
  std::ostringstream out;
  out << "link,time,A,D,x,w_lagrangian\n";
  for (int i = 1; i <= state.scenario().size(); ++i) {
    const LinkFlows<S>& link = state.link(i);
    for (const S& t : merge_breakpoints(link.arrivals.times(), link.departures.times())) {
      const S a = link.arrivals.value(t);
      const S d = link.departures.value(t);
      S wait(0);
      if (a > d) {
        if (const auto leave = link.departures.leftmost_preimage(a)) {
          wait = std::max(S(0), S(*leave - t));
        }
      }
      out << i << ',' << format_scalar(t) << ',' << format_scalar(a) << ',' << format_scalar(d)
          << ',' << format_scalar(link.departure_rate.value(t)) << ',' << format_scalar(wait)
          << '\n';
    }
  }
  return out.str();
}

template <Scalar S>
std::string cost_json(const CostBreakdown<S>& lagrangian, const CostBreakdown<S>& eulerian) {
  Json root;
  root["exact_mode"] = kIsExact<S>;
  root["lagrangian"] = cost_block(lagrangian);
  root["eulerian"] = cost_block(eulerian);
  return dump(root);
}

std::string feasibility_json(const FeasibilityReport& report) {
  Json root;
  root["feasible"] = report.feasible();
  root["constraints"] = Json::array({verdict_json(report.complementarity),
                                     verdict_json(report.demand),
                                     verdict_json(report.nonnegativity),
                                     verdict_json(report.slope)});
  return dump(root);
}

template <Scalar S>
std::string transform_json(const TransformResult<S>& r) {
  Json root;
  root["exact_mode"] = kIsExact<S>;
  root["original_cost"] = cost_block(r.original_cost);
  root["transformed_cost"] = cost_block(r.transformed_cost);
  put(root, "cost_delta", r.cost_delta);
  put(root, "predicted_delta", r.predicted_delta);
  put(root, "schedule_delta", r.schedule_delta);
  put(root, "max_q_star_violation", r.max_inflow_violation);
  put(root, "max_transformed_wait", r.max_transformed_wait);
  put(root, "max_transformed_queue", r.max_transformed_queue);
  put(root, "departure_mismatch", r.departure_mismatch);
  return dump(root);
}

template <Scalar S>
std::string solution_csv(const LpSolution<S>& sol) {
  std::ostringstream out;
  out << "origin,slot_start,slot_end,q_star,rho_i\n";
  const auto& sc = sol.scenario;
  for (int i = 1; i <= sc.size(); ++i) {
    for (int k = 0; k < sc.slot_count(); ++k) {
      out << i << ',' << format_scalar(sc.slot_start(k)) << ',' << format_scalar(sc.slot_end(k))
          << ',' << format_scalar(sol.q[i][k]) << ',' << format_scalar(sol.rho[i]) << '\n';
    }
  }
  return out.str();
}

template <Scalar S>
std::string price_csv(const LpSolution<S>& sol) {
  std::ostringstream out;
  out << "link,slot_start,p_ik\n";
  const auto& sc = sol.scenario;
  for (int i = 1; i <= sc.size(); ++i) {
    for (int k = 0; k < sc.slot_count(); ++k) {
      out << i << ',' << format_scalar(sc.slot_start(k)) << ',' << format_scalar(sol.price[i][k])
          << '\n';
    }
  }
  return out.str();
}

template <Scalar S>
std::string summary_json(const LpSolution<S>& sol) {
  Json root;
  put(root, "objective", sol.objective);
  put(root, "schedule_cost", sol.schedule_cost);
  put(root, "free_flow_cost", sol.free_flow_cost);
  root["solver_iterations"] = sol.iterations;
  root["exact_mode"] = sol.exact;
  root["residual"] = sol.residual;
  return dump(root);
}

std::string optimality_json(const OptimalityReport& report) {
  Json root;
  root["optimal"] = report.optimal();
  Json list = Json::array();
  for (const auto* v : report.verdicts()) list.push_back(verdict_json(*v));
  root["conditions"] = list;
  return dump(root);
}

std::string verification_json(const VerificationReport& report) {
  Json root;
  root["passed"] = report.passed();
  root["seed"] = report.seed;
  root["exact_mode"] = report.exact;
  root["lp_objective"] = report.lp_objective;

  Json gen;
  const auto& s = report.options.sampler;
  gen["kind"] = "dirichlet_windows";
  gen["segments"] = s.segments;
  gen["max_retries"] = s.max_retries;
  gen["min_window_fraction"] = s.min_window_fraction;
  gen["time_grid"] = s.time_grid;
  gen["weight_grid"] = s.weight_grid;
  root["generator"] = gen;
  root["tol"] = report.options.tol;
  root["lp_tol"] = report.options.lp_tol;

  const auto& m = report.summary;
  Json summary;
  summary["samples"] = m.samples;
  summary["passed"] = m.passed;
  summary["feasible"] = m.feasible;
  summary["schedule_ok"] = m.schedule_ok;
  summary["improvement_ok"] = m.improvement_ok;
  summary["prediction_ok"] = m.prediction_ok;
  summary["lp_bound_ok"] = m.lp_bound_ok;
  summary["nonnegative_ok"] = m.nonnegative_ok;
  summary["queued_samples"] = m.queued_samples;
  summary["worst_schedule_delta"] = m.worst_schedule_delta;
  summary["worst_cost_delta"] = m.samples ? m.worst_cost_delta : 0.0;
  summary["worst_prediction_gap"] = m.worst_prediction_gap;
  summary["worst_q_star_violation"] = m.worst_q_star_violation;
  summary["min_lp_gap"] = m.min_lp_gap;
  summary["min_total_cost"] = m.min_total_cost;
  root["summary"] = summary;

  Json trip;
  trip["available"] = report.round_trip.available;
  trip["objective"] = report.round_trip.objective;
  trip["simulated_cost"] = report.round_trip.simulated_cost;
  trip["max_queue"] = report.round_trip.max_queue;
  trip["gap"] = report.round_trip.gap;
  root["lp_round_trip"] = trip;

  Json records = Json::array();
  for (const auto& r : report.records) {
    Json j;
    j["sample_id"] = r.sample_id;
    j["feasible"] = r.feasible;
    j["schedule_delta"] = r.schedule_delta;
    j["cost_delta"] = r.cost_delta;
    j["predicted_delta"] = r.predicted_delta;
    j["max_q_star_violation"] = r.max_q_star_violation;
    j["max_transformed_wait"] = r.max_transformed_wait;
    j["original_cost"] = r.original_cost;
    j["transformed_cost"] = r.transformed_cost;
    j["lp_gap"] = r.lp_gap;
    j["passed"] = r.passed();
    if (!r.error.empty()) j["error"] = r.error;
    records.push_back(j);
  }
  root["records"] = records;
  return dump(root);
}

std::string error_class_name(ErrorClass c) {
  switch (c) {
    case ErrorClass::kParse:
      return "parse";
    case ErrorClass::kValidation:
      return "validation";
    case ErrorClass::kInfeasible:
      return "infeasible";
    case ErrorClass::kCheckFailed:
      return "check_failed";
  }
  return "unknown";
}

std::string error_json(const std::string& kind, const std::string& error_class,
                       const std::string& message) {
  Json root;
  Json err;
  err["kind"] = kind;
  err["class"] = error_class;
  err["message"] = message;
  root["error"] = err;
  return dump(root);
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ValueError("cannot write " + path.string());
  out << text;
}

#define DSO_TREE_INSTANTIATE(S)                                                              \
  template ScenarioDocument<S> parse_scenario<S>(std::string_view);                         \
  template ScenarioDocument<S> load_scenario<S>(const std::filesystem::path&);               \
  template std::string scenario_json<S>(const Scenario<S>&, const InflowProfiles<S>*);      \
  template std::string state_csv<S>(const TrafficState<S>&);                                \
  template std::string cost_json<S>(const CostBreakdown<S>&, const CostBreakdown<S>&);      \
  template std::string transform_json<S>(const TransformResult<S>&);                        \
  template std::string solution_csv<S>(const LpSolution<S>&);                               \
  template std::string price_csv<S>(const LpSolution<S>&);                                  \
  template std::string summary_json<S>(const LpSolution<S>&);

DSO_TREE_INSTANTIATE(double)
DSO_TREE_INSTANTIATE(Rational)

#undef DSO_TREE_INSTANTIATE

}  // namespace dso_tree
