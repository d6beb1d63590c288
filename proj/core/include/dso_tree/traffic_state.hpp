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

#ifndef DSO_TREE_TRAFFIC_STATE_HPP_
#define DSO_TREE_TRAFFIC_STATE_HPP_

#include <vector>

#include "dso_tree/piecewise.hpp"
#include "dso_tree/scalar.hpp"
#include "dso_tree/scenario.hpp"

namespace dso_tree {

// Eulerian record of one bottleneck. Times are clock times at the
// bottleneck, which sits at the downstream end of its link.
template <Scalar S>
struct LinkFlows {
  StepFunction<S> arrival_rate;    // u_i
  StepFunction<S> departure_rate;  // x_i
  CumulativeCurve<S> arrivals;     // A_i
  CumulativeCurve<S> departures;   // D_i
};

// Per-origin Eulerian inflow profiles, indexed by node id (slot 0 unused).
template <Scalar S>
using InflowProfiles = std::vector<StepFunction<S>>;

template <Scalar S>
class TrafficState {
 public:
  TrafficState(Scenario<S> scenario, InflowProfiles<S> origin_inflows,
               std::vector<LinkFlows<S>> links)
      : scenario_(std::move(scenario)),
        origin_inflows_(std::move(origin_inflows)),
        links_(std::move(links)) {}

  const Scenario<S>& scenario() const { return scenario_; }
  const InflowProfiles<S>& origin_inflows() const { return origin_inflows_; }
  const StepFunction<S>& origin_inflow(int node) const { return origin_inflows_.at(node); }
  const LinkFlows<S>& link(int node) const { return links_.at(node); }

  S queue_length(int node, const S& t) const {
    return link(node).arrivals.value(t) - link(node).departures.value(t);
  }
  // Largest A_i - D_i over all links and times (attained at breakpoints).
  S max_queue() const;
  // Rate at which commuters reach the destination.
  StepFunction<S> destination_arrival_rate() const;
  // Time the last commuter reaches the destination, or t_start with no flow.
  S last_destination_arrival() const;

 private:
  Scenario<S> scenario_;
  InflowProfiles<S> origin_inflows_;
  std::vector<LinkFlows<S>> links_;
};

// Point-queue response of a bottleneck with capacity `mu` to arrival rate
// `arrivals`: departures run at `mu` while a queue is present and follow
// the arrival rate otherwise. The returned rate extends past the last
// arrival until the queue has drained.
template <Scalar S>
StepFunction<S> point_queue_departures(const StepFunction<S>& arrivals, const S& mu);

// Propagates origin inflows (Eulerian entry rates at each origin node)
// through the tree. Origin i's commuters and the outflow of every child
// bottleneck travel d_i before reaching bottleneck i.
//
// Throws ValueError on negative inflow rates or a profile count different
// from N + 1, DomainError if an inflow leaves the horizon, and DemandError
// if an inflow does not integrate to the origin's demand (exactly in exact
// mode, to 1e-9 relative otherwise).
template <Scalar S>
TrafficState<S> simulate(const Scenario<S>& scenario, const InflowProfiles<S>& origin_inflows);

}  // namespace dso_tree

#endif  // DSO_TREE_TRAFFIC_STATE_HPP_
