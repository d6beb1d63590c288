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

#include "dso_tree/cost.hpp"

#include <algorithm>

namespace dso_tree {

template <Scalar S>
CostBreakdown<S> total_cost(const LagrangianView<S>& view) {
  CostBreakdown<S> cost;
  const auto& scenario = view.scenario;
  const auto& net = scenario.network();
  const int n = scenario.size();
  std::vector<S> path_free_flow(n + 1, S(0));
  for (int i = 1; i <= n; ++i) path_free_flow[i] = net.path_free_flow(i);

  for (int k = 0; k < view.interval_count(); ++k) {
    const S h = view.interval_length(k);
    const S schedule = scenario.cost().integral(view.grid[k], view.grid[k + 1]);
    for (int i = 1; i <= n; ++i) {
      const S& q = view.inflow[i][k];
      if (q == S(0)) continue;
      S waiting(0);
      for (int j : scenario.topology().downstream(i)) waiting += view.wait[j][k].mean();
      cost.schedule += q * schedule;
      cost.queueing += q * waiting * h;
      cost.free_flow += q * path_free_flow[i] * h;
    }
  }
  cost.total = cost.schedule + cost.queueing + cost.free_flow;
  return cost;
}

template <Scalar S>
CostBreakdown<S> total_cost(const TrafficState<S>& state) {
  return total_cost(lagrangian_view(state));
}

template <Scalar S>
CostBreakdown<S> eulerian_cost(const TrafficState<S>& state) {
  CostBreakdown<S> cost;
  const auto& scenario = state.scenario();
  const auto& c = scenario.cost();

  const StepFunction<S> reaching = state.destination_arrival_rate();
  for (int k = 0; k < reaching.segment_count(); ++k) {
    const S& rate = reaching.values()[k];
    if (rate == S(0)) continue;
    cost.schedule += rate * c.integral(reaching.breakpoints()[k], reaching.breakpoints()[k + 1]);
  }

  for (int i = 1; i <= scenario.size(); ++i) {
    const auto& flows = state.link(i);
    if (flows.arrivals.empty()) continue;
    const S lo = std::min(flows.arrivals.times().front(), flows.departures.times().front());
    const S hi = std::max(flows.arrivals.times().back(), flows.departures.times().back());
    cost.queueing += flows.arrivals.integral(lo, hi) - flows.departures.integral(lo, hi);
    cost.free_flow += scenario.demand(i) * scenario.network().path_free_flow(i);
  }
  cost.total = cost.schedule + cost.queueing + cost.free_flow;
  return cost;
}

#define DSO_TREE_INSTANTIATE(S)                                                  \
  template CostBreakdown<S> total_cost<S>(const LagrangianView<S>&);             \
  template CostBreakdown<S> total_cost<S>(const TrafficState<S>&);               \
  template CostBreakdown<S> eulerian_cost<S>(const TrafficState<S>&);

DSO_TREE_INSTANTIATE(double)
DSO_TREE_INSTANTIATE(Rational)

#undef DSO_TREE_INSTANTIATE

}  // namespace dso_tree
