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

#include "dso_tree/traffic_state.hpp"

#include <algorithm>
#include <string>

#include "dso_tree/errors.hpp"

namespace dso_tree {

template <Scalar S>
S TrafficState<S>::max_queue() const {
  S worst(0);
  for (int i = 1; i <= scenario_.size(); ++i) {
    const auto& flows = links_[i];
    for (const auto& t : flows.arrivals.times()) worst = std::max(worst, queue_length(i, t));
    for (const auto& t : flows.departures.times()) worst = std::max(worst, queue_length(i, t));
  }
  return worst;
}

template <Scalar S>
StepFunction<S> TrafficState<S>::destination_arrival_rate() const {
  StepFunction<S> total;
  for (int j : scenario_.topology().children(0)) total = total + links_[j].departure_rate;
  return total.simplified();
}

template <Scalar S>
S TrafficState<S>::last_destination_arrival() const {
  const auto support = destination_arrival_rate().support();
  return support ? support->second : scenario_.t_start();
}

template <Scalar S>
StepFunction<S> point_queue_departures(const StepFunction<S>& arrivals, const S& mu) {
  if (arrivals.empty()) return StepFunction<S>();
  const auto& b = arrivals.breakpoints();
  const auto& u = arrivals.values();
  const S scale = std::max(S(1), arrivals.integral());

  std::vector<S> out_b{b.front()};
  std::vector<S> out_v;
  auto emit = [&](const S& end, const S& rate) {
    if (!(end > out_b.back())) return;
    out_b.push_back(end);
    out_v.push_back(rate);
  };

  S queue(0);
  for (std::size_t k = 0; k < u.size(); ++k) {
    const S& start = b[k];
    const S& end = b[k + 1];
    const S& rate = u[k];
    if (queue == S(0) && rate <= mu) {
      emit(end, rate);
    } else if (rate >= mu) {
      emit(end, mu);
      queue = snap_to_zero(S(queue + (rate - mu) * (end - start)), scale);
    } else {
      const S drain_time = queue / (mu - rate);
      if (start + drain_time >= end) {
        emit(end, mu);
        queue = snap_to_zero(S(queue - (mu - rate) * (end - start)), scale);
        if (queue < S(0)) queue = S(0);
      } else {
        emit(start + drain_time, mu);
        emit(end, rate);
        queue = S(0);
      }
    }
  }
  if (queue > S(0)) emit(b.back() + queue / mu, mu);
  return StepFunction<S>(std::move(out_b), std::move(out_v)).simplified();
}

template <Scalar S>
TrafficState<S> simulate(const Scenario<S>& scenario, const InflowProfiles<S>& origin_inflows) {
  const int n = scenario.size();
  if (static_cast<int>(origin_inflows.size()) != n + 1) {
    throw ValueError("expected " + std::to_string(n + 1) +
                     " inflow profiles (indexed by node id), got " +
                     std::to_string(origin_inflows.size()));
  }
  for (int i = 1; i <= n; ++i) {
    const auto& inflow = origin_inflows[i];
    if (inflow.min_value() < S(0)) {
      throw ValueError("inflow of origin " + std::to_string(i) + " has a negative rate");
    }
    if (const auto support = inflow.support()) {
      if (support->first < scenario.t_start() || support->second > scenario.t_end()) {
        throw DomainError("inflow of origin " + std::to_string(i) + " on [" +
                          format_scalar(support->first) + ", " + format_scalar(support->second) +
                          "] leaves the horizon");
      }
    }
    const S total = inflow.integral();
    const S& demand = scenario.demand(i);
    bool matches = false;
    if constexpr (kIsExact<S>) {
      matches = total == demand;
    } else {
      matches = std::abs(total - demand) <= 1e-9 * std::max(1.0, std::abs(demand));
    }
    if (!matches) {
      throw DemandError("inflow of origin " + std::to_string(i) + " integrates to " +
                        format_scalar(total) + " but demand is " + format_scalar(demand));
    }
  }

  const auto& net = scenario.network();
  std::vector<LinkFlows<S>> links(n + 1);
  for (int i : scenario.topology().bottom_up()) {
    StepFunction<S> entering = origin_inflows[i];
    for (int j : scenario.topology().children(i)) entering = entering + links[j].departure_rate;
    LinkFlows<S>& flows = links[i];
    flows.arrival_rate = entering.simplified().shifted(net.free_flow(i));
    flows.departure_rate = point_queue_departures(flows.arrival_rate, net.capacity(i));
    flows.arrivals = flows.arrival_rate.cumulative();
    flows.departures = flows.departure_rate.cumulative();
  }
  return TrafficState<S>(scenario, origin_inflows, std::move(links));
}

#define DSO_TREE_INSTANTIATE(S)                                                             \
  template class TrafficState<S>;                                                           \
  template StepFunction<S> point_queue_departures<S>(const StepFunction<S>&, const S&);     \
  template TrafficState<S> simulate<S>(const Scenario<S>&, const InflowProfiles<S>&);

DSO_TREE_INSTANTIATE(double)
DSO_TREE_INSTANTIATE(Rational)

#undef DSO_TREE_INSTANTIATE

}  // namespace dso_tree
