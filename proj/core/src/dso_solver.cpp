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

#include "dso_tree/dso_solver.hpp"

#include <algorithm>
#include <string>

#include "dso_tree/errors.hpp"
#include "dso_tree/min_cost_flow.hpp"

namespace dso_tree {
namespace {

template <Scalar S>
void record(ConstraintVerdict& verdict, bool ok, const S& magnitude, int link, const S& time) {
  const double m = to_double(magnitude);
  if (!ok) verdict.pass = false;
  if (m > verdict.worst_violation || (!ok && verdict.link == 0)) {
    verdict.worst_violation = m;
    verdict.link = link;
    verdict.time = to_double(time);
  }
}

template <Scalar S>
S positive_part(const S& x) {
  return x > S(0) ? x : S(0);
}

}  // namespace

template <Scalar S>
std::vector<typename TimeExpandedNet<S>::ArcSpec> TimeExpandedNet<S>::arcs() const {
  const auto& topo = scenario.topology();
  std::vector<ArcSpec> out;
  for (int i = 1; i <= origins(); ++i) {
    out.push_back({ArcKind::kSupply, source(), origin_node(i), scenario.demand(i), S(0), i, -1});
  }
  for (int k = 0; k < slots(); ++k) {
    for (int i = 1; i <= origins(); ++i) {
      out.push_back({ArcKind::kEntry, origin_node(i), slot_node(i, k), std::nullopt,
                     entry_cost(i, k), i, k});
    }
    for (int i = 1; i <= origins(); ++i) {
      const int parent = topo.parent(i);
      const int head = parent == 0 ? sink() : slot_node(parent, k);
      out.push_back({ArcKind::kTree, slot_node(i, k), head, slot_capacity[i], S(0), i, k});
    }
  }
  return out;
}

template <Scalar S>
TimeExpandedNet<S> discretize(const Scenario<S>& scenario) {
  TimeExpandedNet<S> net{scenario, {}, {}, {}};
  const int n = scenario.size();
  for (int k = 0; k < scenario.slot_count(); ++k) {
    net.slot_cost.push_back(scenario.cost().average(scenario.slot_start(k), scenario.slot_end(k)));
  }
  net.path_cost.assign(n + 1, S(0));
  net.slot_capacity.assign(n + 1, S(0));
  for (int i = 1; i <= n; ++i) {
    net.path_cost[i] = scenario.network().path_free_flow(i);
    net.slot_capacity[i] = scenario.network().capacity(i) * scenario.dt();
  }
  return net;
}

template <Scalar S>
S LpSolution<S>::link_load(int link, int slot) const {
  S load(0);
  for (int j : scenario.topology().upstream(link)) load += q[j][slot];
  return load;
}

template <Scalar S>
LpSolution<S> solve(const Scenario<S>& scenario) {
  const TimeExpandedNet<S> net = discretize(scenario);
  const int n = net.origins();
  const int slots = net.slots();

  MinCostFlow<S> flow(net.node_count());
  const auto specs = net.arcs();
  std::vector<std::vector<int>> entry_arc(n + 1, std::vector<int>(slots, -1));
  std::vector<std::vector<int>> tree_arc(n + 1, std::vector<int>(slots, -1));
  for (const auto& a : specs) {
    const int id = flow.add_arc(a.from, a.to, a.capacity, a.cost);
    if (a.kind == TimeExpandedNet<S>::ArcKind::kEntry) entry_arc[a.origin][a.slot] = id;
    if (a.kind == TimeExpandedNet<S>::ArcKind::kTree) tree_arc[a.origin][a.slot] = id;
  }

  const S demand = scenario.total_demand();
  const S sent = flow.solve(net.source(), net.sink(), demand);
  const S unrouted = demand - sent;
  S slack(0);
  if constexpr (!kIsExact<S>) slack = 1e-9 * std::max(1.0, demand);
  if (unrouted > slack) {
    throw InfeasibleError("only " + format_scalar(sent) + " of " + format_scalar(demand) +
                          " commuters fit through the network inside the horizon");
  }

  LpSolution<S> sol;
  sol.scenario = scenario;
  sol.iterations = flow.augmentations();
  sol.residual = to_double(unrouted);
  sol.q.assign(n + 1, std::vector<S>(slots, S(0)));
  for (int i = 1; i <= n; ++i) {
    for (int k = 0; k < slots; ++k) {
      const S& v = flow.flow(entry_arc[i][k]);
      sol.q[i][k] = v;
      sol.schedule_cost += v * net.slot_cost[k];
      sol.free_flow_cost += v * net.path_cost[i];
    }
  }
  sol.objective = sol.schedule_cost + sol.free_flow_cost;

  // Duals from residual distances out of the sink. Nodes reachable from the
  // sink form a downstream-closed set, so each tree arc leaving a reachable
  // slot copy has a reachable head.
  const auto dist = flow.residual_distances_from(net.sink());
  const auto pi = [&](int node) -> const std::optional<S>& { return dist[node]; };
  sol.price.assign(n + 1, std::vector<S>(slots, S(0)));
  for (int i = 1; i <= n; ++i) {
    for (int k = 0; k < slots; ++k) {
      const int tail = net.slot_node(i, k);
      const int parent = scenario.topology().parent(i);
      const int head = parent == 0 ? net.sink() : net.slot_node(parent, k);
      if (pi(tail) && pi(head)) sol.price[i][k] = positive_part(S(*pi(head) - *pi(tail)));
    }
  }
  sol.rho.assign(n + 1, S(0));
  for (int i = 1; i <= n; ++i) {
    if (pi(net.origin_node(i))) {
      sol.rho[i] = -*pi(net.origin_node(i));
      continue;
    }
    // Origin carries no flow: the cheapest priced route is the multiplier.
    std::optional<S> best;
    for (int k = 0; k < slots; ++k) {
      S c = net.entry_cost(i, k);
      for (int j : scenario.topology().downstream(i)) c += sol.price[j][k];
      if (!best || c < *best) best = c;
    }
    sol.rho[i] = best.value_or(S(0));
  }
  return sol;
}

template <Scalar S>
OptimalityReport check_optimality(const LpSolution<S>& solution, const Scenario<S>& scenario,
                                  const S& tol) {
  const TimeExpandedNet<S> net = discretize(scenario);
  const auto& topo = scenario.topology();
  const int n = net.origins();
  OptimalityReport report;

  S dual_objective(0);
  for (int i = 1; i <= n; ++i) {
    const S& demand = scenario.demand(i);
    S routed(0);
    for (int k = 0; k < net.slots(); ++k) {
      const S t = scenario.slot_start(k);
      const S& q = solution.q[i][k];
      const S& p = solution.price[i][k];
      routed += q;
      record(report.nonnegativity, q >= -tol, positive_part(S(-q)), i, t);
      record(report.price_sign, p >= -tol, positive_part(S(-p)), i, t);

      S priced = net.entry_cost(i, k);
      for (int j : topo.downstream(i)) priced += solution.price[j][k];
      const S gap = priced - solution.rho[i];
      const S scale = std::max(S(1), abs_value(solution.rho[i]));
      record(report.reduced_cost, gap >= -tol * scale, positive_part(S(-gap)), i, t);
      if (q > tol) {
        const S miss = abs_value(gap);
        record(report.reduced_cost_equality, miss <= tol * scale, miss, i, t);
      }

      const S& cap = net.slot_capacity[i];
      const S load = solution.link_load(i, k);
      const S cap_tol = tol * std::max(S(1), cap);
      record(report.capacity, load <= cap + cap_tol, positive_part(S(load - cap)), i, t);
      if (p > tol) {
        const S idle = abs_value(S(cap - load));
        record(report.capacity_complementarity, idle <= cap_tol, idle, i, t);
      }
      dual_objective -= p * cap;
    }
    const S miss = abs_value(S(routed - demand));
    record(report.demand, miss <= tol * std::max(S(1), demand), miss, i, scenario.t_start());
    dual_objective += solution.rho[i] * demand;
  }

  const S duality_gap = abs_value(S(solution.objective - dual_objective));
  record(report.strong_duality,
         duality_gap <= tol * std::max(S(1), abs_value(solution.objective)), duality_gap, 0,
         scenario.t_start());
  return report;
}

template <Scalar S>
InflowProfiles<S> inflows_from_solution(const LpSolution<S>& solution) {
  const Scenario<S>& scenario = solution.scenario;
  const int n = scenario.size();
  InflowProfiles<S> inflows(n + 1);
  for (int i = 1; i <= n; ++i) {
    const S shift = scenario.network().path_free_flow(i);
    std::vector<S> breakpoints;
    std::vector<S> rates;
    for (int k = 0; k < scenario.slot_count(); ++k) {
      breakpoints.push_back(scenario.slot_start(k) - shift);
      rates.push_back(solution.q[i][k] / scenario.dt());
    }
    breakpoints.push_back(scenario.t_end() - shift);
    StepFunction<S> profile = StepFunction<S>(breakpoints, rates).simplified();
    if (const auto support = profile.support(); support && support->first < scenario.t_start()) {
      throw HorizonError("origin " + std::to_string(i) + " would have to enter at " +
                         format_scalar(support->first) + ", before the horizon starts");
    }
    inflows[i] = std::move(profile);
  }
  return inflows;
}

#define DSO_TREE_INSTANTIATE(S)                                                          \
  template struct TimeExpandedNet<S>;                                                    \
  template struct LpSolution<S>;                                                         \
  template TimeExpandedNet<S> discretize<S>(const Scenario<S>&);                         \
  template LpSolution<S> solve<S>(const Scenario<S>&);                                   \
  template OptimalityReport check_optimality<S>(const LpSolution<S>&, const Scenario<S>&, \
                                                const S&);                               \
  template InflowProfiles<S> inflows_from_solution<S>(const LpSolution<S>&);

DSO_TREE_INSTANTIATE(double)
DSO_TREE_INSTANTIATE(Rational)

#undef DSO_TREE_INSTANTIATE

}  // namespace dso_tree
