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

#ifndef DSO_TREE_QUEUE_ELIMINATOR_HPP_
#define DSO_TREE_QUEUE_ELIMINATOR_HPP_

#include "dso_tree/cost.hpp"
#include "dso_tree/feasibility.hpp"
#include "dso_tree/lagrangian_view.hpp"
#include "dso_tree/scalar.hpp"
#include "dso_tree/traffic_state.hpp"

namespace dso_tree {

template <Scalar S>
struct TransformResult {
  TrafficState<S> original;
  TrafficState<S> transformed;
  LagrangianView<S> original_view;
  LagrangianView<S> transformed_view;
  CostBreakdown<S> original_cost;
  CostBreakdown<S> transformed_cost;
  // Eulerian entry profiles that reproduce the original departure flows
  // without queueing.
  InflowProfiles<S> transformed_inflows;

  S cost_delta;       // transformed total minus original total
  S predicted_delta;  // minus the original queueing cost, see predicted_cost_delta
  S schedule_delta;   // transformed schedule cost minus original
  // max(0, -q*) over the raw transformed entry rates and the Lagrangian
  // inflows of the transformed state.
  S max_inflow_violation;
  S max_transformed_wait;   // sup |w*|
  S max_transformed_queue;  // sup (A* - D*)
  S departure_mismatch;     // sup over links of |x*_i - x_i|
};

// -sum_i integral of w_i(t) * (sum of q_j over the subtree of i) dt, the
// cost change the transform must produce. Never positive.
template <Scalar S>
S predicted_cost_delta(const LagrangianView<S>& original);

// Builds the queue-free state with the same link departure flows. Origin i
// enters at x_i(s + d_i) - sum over children j of x_j(s), i.e. exactly
// when its commuters would have left bottleneck i minus the free-flow time,
// and the result is re-simulated rather than trusted.
//
// Throws InfeasibleInputError if `state` fails check_feasibility at `tol`,
// HorizonError if the new entry profile leaves the horizon and
// TransformError if re-simulation still produces a queue or a negative entry
// rate below -tol.
template <Scalar S>
TransformResult<S> eliminate_queues(const TrafficState<S>& state, const S& tol);

}  // namespace dso_tree

#endif  // DSO_TREE_QUEUE_ELIMINATOR_HPP_
