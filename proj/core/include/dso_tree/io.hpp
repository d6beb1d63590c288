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

#ifndef DSO_TREE_IO_HPP_
#define DSO_TREE_IO_HPP_

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dso_tree/cost.hpp"
#include "dso_tree/dso_solver.hpp"
#include "dso_tree/errors.hpp"
#include "dso_tree/feasibility.hpp"
#include "dso_tree/queue_eliminator.hpp"
#include "dso_tree/scalar.hpp"
#include "dso_tree/scenario.hpp"
#include "dso_tree/traffic_state.hpp"
#include "dso_tree/verification.hpp"

namespace dso_tree {

// Scenario file contents. `inflows` is present when the file carries
// per-origin entry profiles.
template <Scalar S>
struct ScenarioDocument {
  Scenario<S> scenario;
  std::optional<InflowProfiles<S>> inflows;
};

// Scenario JSON:
//   {"nodes": [{"id", "parent", "mu", "d", "Q"}...],
//    "cost": {"t_star", "beta", "gamma"}, "horizon": [a, b], "dt": step,
//    "inflows": [{"origin", "breakpoints": [...], "rates": [...]}...]}
// "inflows" is optional. Numbers may be JSON numbers (read as the shortest
// decimal that round-trips) or strings such as "3/4" or "0.1", which are
// exact. Node ids must be exactly 1..N in some order.
//
// Throws ParseError on malformed JSON or missing fields and the usual
// validation errors from the network and scenario constructors.
template <Scalar S>
ScenarioDocument<S> parse_scenario(std::string_view text);

template <Scalar S>
ScenarioDocument<S> load_scenario(const std::filesystem::path& path);

// Writes a scenario in the format above. Values are exact strings in exact
// mode and JSON numbers otherwise, so exact files reload losslessly.
template <Scalar S>
std::string scenario_json(const Scenario<S>& scenario, const InflowProfiles<S>* inflows = nullptr);

// One row per link and cumulative-curve breakpoint:
//   link,time,A,D,x,w_lagrangian
// time is clock time at the bottleneck, x the departure rate from that
// instant on and w_lagrangian the wait of the commuter reaching the
// bottleneck at that instant.
template <Scalar S>
std::string state_csv(const TrafficState<S>& state);

template <Scalar S>
std::string cost_json(const CostBreakdown<S>& lagrangian, const CostBreakdown<S>& eulerian);

std::string feasibility_json(const FeasibilityReport& report);

template <Scalar S>
std::string transform_json(const TransformResult<S>& result);

// origin,slot_start,slot_end,q_star,rho_i
template <Scalar S>
std::string solution_csv(const LpSolution<S>& solution);

// link,slot_start,p_ik
template <Scalar S>
std::string price_csv(const LpSolution<S>& solution);

// {objective, schedule_cost, free_flow_cost, solver_iterations, exact_mode}
template <Scalar S>
std::string summary_json(const LpSolution<S>& solution);

std::string optimality_json(const OptimalityReport& report);

std::string verification_json(const VerificationReport& report);

std::string error_json(const std::string& kind, const std::string& error_class,
                       const std::string& message);

std::string error_class_name(ErrorClass c);

// Writes `text` to `path`, creating parent directories.
void write_text(const std::filesystem::path& path, const std::string& text);

}  // namespace dso_tree

#endif  // DSO_TREE_IO_HPP_
