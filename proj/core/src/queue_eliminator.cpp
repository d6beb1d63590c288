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

#include "dso_tree/queue_eliminator.hpp"

#include <algorithm>
#include <string>

#include "dso_tree/errors.hpp"

namespace dso_tree {
namespace {

std::string describe(const ConstraintVerdict& v) {
  return v.name + " violated by " + format_scalar(v.worst_violation) + " at link " +
         std::to_string(v.link) + ", t = " + format_scalar(v.time);
}

}  // namespace

template <Scalar S>
S predicted_cost_delta(const LagrangianView<S>& original) {
  S total(0);
  for (int i = 1; i <= original.scenario.size(); ++i) {
    for (int k = 0; k < original.interval_count(); ++k) {
      const S& mean_wait = original.wait[i][k].mean();
      if (mean_wait == S(0)) continue;
      total += mean_wait * original.subtree_inflow(i, k) * original.interval_length(k);
    }
  }
  return -total;
}

template <Scalar S>
TransformResult<S> eliminate_queues(const TrafficState<S>& state, const S& tol) {
  const Scenario<S>& scenario = state.scenario();
  const auto& net = scenario.network();
  const auto& topo = scenario.topology();
  const int n = scenario.size();

  LagrangianView<S> original_view = lagrangian_view(state);
  const FeasibilityReport report = check_feasibility(original_view, tol);
  if (!report.feasible()) {
    for (const auto* v : {&report.complementarity, &report.demand, &report.nonnegativity,
                          &report.slope}) {
      if (!v->pass) throw InfeasibleInputError("input state is infeasible: " + describe(*v));
    }
  }

  S noise(0);
  if constexpr (!kIsExact<S>) noise = 1e-12 * std::max(1.0, scenario.total_demand());

  S violation(0);
  InflowProfiles<S> inflows(n + 1);
  for (int i = 1; i <= n; ++i) {
    StepFunction<S> entry = state.link(i).departure_rate.shifted(S(-net.free_flow(i)));
    for (int j : topo.children(i)) entry = entry - state.link(j).departure_rate;
    entry = entry.flushed(noise).simplified();
    violation = std::max(violation, S(-entry.min_value()));
    if (entry.min_value() < -tol) {
      throw TransformError("transformed entry rate of origin " + std::to_string(i) + " is " +
                           format_scalar(entry.min_value()) + " < 0");
    }
    // Remaining negatives are within tolerance; clip them before simulating.
    std::vector<S> values = entry.values();
    for (auto& v : values) v = std::max(v, S(0));
    if (!values.empty()) entry = StepFunction<S>(entry.breakpoints(), std::move(values));
    if (const auto support = entry.support()) {
      if (support->first < scenario.t_start() || support->second > scenario.t_end()) {
        throw HorizonError("transformed inflow of origin " + std::to_string(i) + " on [" +
                           format_scalar(support->first) + ", " +
                           format_scalar(support->second) + "] leaves the horizon; pad it");
      }
    }
    inflows[i] = std::move(entry);
  }

  TrafficState<S> transformed = simulate(scenario, inflows);
  const S queue = transformed.max_queue();
  if (queue > tol * std::max(S(1), scenario.total_demand())) {
    throw TransformError("re-simulated transformed state still queues (" + format_scalar(queue) +
                         ")");
  }

  S mismatch(0);
  for (int i = 1; i <= n; ++i) {
    mismatch = std::max(mismatch, sup_distance(transformed.link(i).departure_rate,
                                               state.link(i).departure_rate));
  }

  LagrangianView<S> transformed_view = lagrangian_view(transformed);
  S max_wait(0);
  for (int i = 1; i <= n; ++i) {
    for (int k = 0; k < transformed_view.interval_count(); ++k) {
      const auto& w = transformed_view.wait[i][k];
      max_wait = std::max({max_wait, abs_value(w.start), abs_value(w.end)});
      violation = std::max(violation, S(-transformed_view.inflow[i][k]));
    }
  }

  CostBreakdown<S> original_cost = total_cost(original_view);
  CostBreakdown<S> transformed_cost = total_cost(transformed_view);
  const S predicted = predicted_cost_delta(original_view);

  return TransformResult<S>{
      state,
      std::move(transformed),
      std::move(original_view),
      std::move(transformed_view),
      original_cost,
      transformed_cost,
      std::move(inflows),
      transformed_cost.total - original_cost.total,
      predicted,
      transformed_cost.schedule - original_cost.schedule,
      violation,
      max_wait,
      queue,
      mismatch,
  };
}

#define DSO_TREE_INSTANTIATE(S)                                                       \
  template S predicted_cost_delta<S>(const LagrangianView<S>&);                      \
  template TransformResult<S> eliminate_queues<S>(const TrafficState<S>&, const S&);

DSO_TREE_INSTANTIATE(double)
DSO_TREE_INSTANTIATE(Rational)

#undef DSO_TREE_INSTANTIATE

}  // namespace dso_tree
