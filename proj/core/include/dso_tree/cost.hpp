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

#ifndef DSO_TREE_COST_HPP_
#define DSO_TREE_COST_HPP_

#include "dso_tree/lagrangian_view.hpp"
#include "dso_tree/scalar.hpp"
#include "dso_tree/traffic_state.hpp"

namespace dso_tree {

template <Scalar S>
struct CostBreakdown {
  S schedule{0};
  S queueing{0};
  S free_flow{0};
  S total{0};
};

// Total system cost with unit value of time, integrated per commuter over
// destination arrival time: schedule delay plus queueing and free-flow time
// along the downstream path.
template <Scalar S>
CostBreakdown<S> total_cost(const LagrangianView<S>& view);

template <Scalar S>
CostBreakdown<S> total_cost(const TrafficState<S>& state);

// Independent accounting in clock time: schedule cost from the destination
// arrival rate, queueing cost as the area between A_i and D_i on each link.
template <Scalar S>
CostBreakdown<S> eulerian_cost(const TrafficState<S>& state);

}  // namespace dso_tree

#endif  // DSO_TREE_COST_HPP_
