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

#ifndef DSO_TREE_DSO_SOLVER_HPP_
#define DSO_TREE_DSO_SOLVER_HPP_

#include <optional>
#include <vector>

#include "dso_tree/feasibility.hpp"
#include "dso_tree/scalar.hpp"
#include "dso_tree/scenario.hpp"
#include "dso_tree/traffic_state.hpp"

namespace dso_tree {

// The slotted system-optimal program as a flow network. Destination
// arrival slots are copies of the tree; commuters of origin i choose a slot
// k by taking the entry arc into copy (i, k), then ride the tree arcs of
// that copy to the sink. All volumes are in commuters per slot.
//
// Node numbering: source 0, origins 1..N, slot copy (i, k) at
// 1 + N + k * N + (i - 1), sink last. Slot-major numbering makes Dijkstra's
// index tie-break prefer the earliest slot, then the lowest origin.
template <Scalar S>
struct TimeExpandedNet {
  enum class ArcKind { kSupply, kEntry, kTree };
  struct ArcSpec {
    ArcKind kind;
    int from;
    int to;
    std::optional<S> capacity;  // nullopt: unbounded
    S cost;
    int origin;  // link or origin the arc belongs to
    int slot;    // -1 for supply arcs
  };

  Scenario<S> scenario;
  std::vector<S> slot_cost;      // mean schedule cost over each slot
  std::vector<S> path_cost;      // free-flow time to the destination, by node
  std::vector<S> slot_capacity;  // mu_i * dt, by node

  int origins() const { return scenario.size(); }
  int slots() const { return static_cast<int>(slot_cost.size()); }
  int source() const { return 0; }
  int origin_node(int i) const { return i; }
  int slot_node(int i, int k) const { return 1 + origins() + k * origins() + (i - 1); }
  int sink() const { return 1 + origins() + origins() * slots(); }
  int node_count() const { return sink() + 1; }

  // Per-commuter cost of origin i arriving in slot k.
  S entry_cost(int i, int k) const { return slot_cost[k] + path_cost[i]; }

  // Supply arcs first, then per slot the entry and tree arcs of every
  // origin in id order.
  std::vector<ArcSpec> arcs() const;
};

template <Scalar S>
TimeExpandedNet<S> discretize(const Scenario<S>& scenario);

template <Scalar S>
struct LpSolution {
  Scenario<S> scenario;
  // Commuter volume of origin i arriving in slot k, [node][slot].
  std::vector<std::vector<S>> q;
  std::vector<S> rho;                  // demand multipliers by origin
  std::vector<std::vector<S>> price;   // capacity multipliers [link][slot]
  S objective{0};
  S schedule_cost{0};
  S free_flow_cost{0};
  int iterations = 0;   // augmenting paths
  double residual = 0;  // demand left unrouted (0 on success)
  bool exact = kIsExact<S>;

  // Volume crossing link i in slot k: q summed over the subtree of i.
  S link_load(int link, int slot) const;
};

// Successive shortest paths on discretize(scenario). Duals are read from
// residual shortest-path distances measured from the sink, which pins the
// sink potential at zero.
//
// Throws InfeasibleError if the demand cannot be routed inside the horizon.
template <Scalar S>
LpSolution<S> solve(const Scenario<S>& scenario);

struct OptimalityReport {
  ConstraintVerdict demand{"demand"};
  ConstraintVerdict nonnegativity{"inflow_nonnegativity"};
  ConstraintVerdict capacity{"capacity"};
  ConstraintVerdict reduced_cost{"reduced_cost_lower_bound"};
  ConstraintVerdict reduced_cost_equality{"reduced_cost_equality"};
  ConstraintVerdict capacity_complementarity{"capacity_complementarity"};
  ConstraintVerdict price_sign{"price_nonnegativity"};
  ConstraintVerdict strong_duality{"strong_duality"};

  bool optimal() const {
    return demand.pass && nonnegativity.pass && capacity.pass && reduced_cost.pass &&
           reduced_cost_equality.pass && capacity_complementarity.pass && price_sign.pass &&
           strong_duality.pass;
  }
  std::vector<const ConstraintVerdict*> verdicts() const {
    return {&demand,        &nonnegativity,           &capacity,   &reduced_cost,
            &reduced_cost_equality, &capacity_complementarity, &price_sign, &strong_duality};
  }
};

// Checks primal feasibility, dual feasibility and complementary slackness
// of `solution` for `scenario`, per origin or link and slot:
//   sum over the downstream path of (p_jk + d_j) + cbar_k >= rho_i, with
//   equality where q_ik > 0;
//   link load equals mu_i * dt where p_ik > 0 and stays below it elsewhere;
//   slot volumes sum to Q_i; and objective = sum rho_i Q_i - sum p_ik mu_i dt.
// Verdict times are slot start times. With tol = 0 in exact mode every
// comparison is exact.
template <Scalar S>
OptimalityReport check_optimality(const LpSolution<S>& solution, const Scenario<S>& scenario,
                                  const S& tol);

// Eulerian entry profiles realising the slot volumes: origin i enters at
// constant rate q_ik / dt during slot k shifted back by its free-flow time.
// Throws HorizonError if an entry would start before the horizon.
template <Scalar S>
InflowProfiles<S> inflows_from_solution(const LpSolution<S>& solution);

}  // namespace dso_tree

#endif  // DSO_TREE_DSO_SOLVER_HPP_
