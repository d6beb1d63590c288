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

#ifndef DSO_TREE_SCENARIO_HPP_
#define DSO_TREE_SCENARIO_HPP_

#include <vector>

#include "dso_tree/scalar.hpp"
#include "dso_tree/schedule_cost.hpp"
#include "dso_tree/tree_network.hpp"

namespace dso_tree {

// A network together with origin demands, the schedule cost, the assignment
// horizon [t_start, t_end] and the discretization step.
template <Scalar S>
class Scenario {
 public:
  Scenario() = default;

  // `demand` has one entry per origin (element k belongs to origin k + 1).
  // Throws ValueError on negative demand, nonpositive step or an empty
  // horizon, DomainError if the step does not divide the horizon, and
  // InfeasibleError if total demand exceeds what the links entering the
  // destination can discharge over the horizon.
  Scenario(TreeNetwork<S> network, std::vector<S> demand, ScheduleCost<S> cost, S t_start,
           S t_end, S dt);

  const TreeNetwork<S>& network() const { return network_; }
  const TreeTopology& topology() const { return network_.topology(); }
  int size() const { return network_.size(); }

  const S& demand(int node) const;
  // Per-origin demands indexed by node id (slot 0 is zero).
  const std::vector<S>& demands() const { return demand_; }
  S total_demand() const;

  const ScheduleCost<S>& cost() const { return cost_; }
  const S& t_start() const { return t_start_; }
  const S& t_end() const { return t_end_; }
  S horizon_length() const { return t_end_ - t_start_; }
  const S& dt() const { return dt_; }

  int slot_count() const { return slot_count_; }
  S slot_start(int k) const { return t_start_ + dt_ * S(k); }
  S slot_end(int k) const { return t_start_ + dt_ * S(k + 1); }

  Scenario with_dt(S dt) const;
  Scenario with_horizon(S t_start, S t_end) const;

 private:
  TreeNetwork<S> network_;
  std::vector<S> demand_;
  ScheduleCost<S> cost_;
  S t_start_{0};
  S t_end_{0};
  S dt_{1};
  int slot_count_ = 0;
};

template <Scalar To, Scalar From>
Scenario<To> scenario_cast(const Scenario<From>& scenario);

}  // namespace dso_tree

#endif  // DSO_TREE_SCENARIO_HPP_
