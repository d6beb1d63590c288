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

#include "dso_tree/lagrangian_view.hpp"

#include <algorithm>
#include <string>

#include "dso_tree/errors.hpp"

namespace dso_tree {
namespace {

template <Scalar S>
S volume_tolerance(const Scenario<S>& scenario) {
  if constexpr (kIsExact<S>) {
    return S(0);
  } else {
    return 1e-12 * std::max(1.0, scenario.total_demand());
  }
}

template <Scalar S>
S time_tolerance(const Scenario<S>& scenario) {
  if constexpr (kIsExact<S>) {
    return S(0);
  } else {
    return 1e-10 * std::max(1.0, scenario.horizon_length());
  }
}

// Follows commuters forward (Eulerian time to destination arrival) and
// backward (destination arrival to bottleneck times) through the tree.
template <Scalar S>
class PathTracer {
 public:
  struct Point {
    S sigma;
    S sigma_rate;
    S tau;
    S tau_rate;
  };

  explicit PathTracer(const TrafficState<S>& state)
      : state_(state),
        net_(state.scenario().network()),
        queue_tol_(volume_tolerance(state.scenario())) {}

  // Departure time of the last commuter reaching bottleneck i at `arrival`.
  S departure_of(int i, const S& arrival) const {
    const auto& flows = state_.link(i);
    const S level = flows.arrivals.value(arrival);
    if (level - flows.departures.value(arrival) <= queue_tol_) return arrival;
    const auto first = flows.departures.leftmost_preimage(level);
    return first ? std::max(arrival, *first) : arrival;
  }

  // Destination arrival time of a commuter leaving bottleneck i at `departure`.
  S to_destination(int i, S departure) const {
    int node = i;
    for (int p = net_.topology().parent(node); p != 0; p = net_.topology().parent(node)) {
      departure = departure_of(p, departure + net_.free_flow(p));
      node = p;
    }
    return departure;
  }

  // Bottleneck times (and their t-derivatives) for destination arrival t.
  void trace(const S& t, std::vector<Point>& out) const {
    out.resize(net_.size() + 1);
    for (int i : net_.topology().top_down()) {
      Point& pt = out[i];
      const int p = net_.topology().parent(i);
      if (p == 0) {
        pt.sigma = t;
        pt.sigma_rate = S(1);
      } else {
        pt.sigma = out[p].tau - net_.free_flow(p);
        pt.sigma_rate = out[p].tau_rate;
      }
      const auto& flows = state_.link(i);
      const S served = flows.departures.value(pt.sigma);
      if (flows.arrivals.value(pt.sigma) - served <= queue_tol_) {
        pt.tau = pt.sigma;
        pt.tau_rate = pt.sigma_rate;
        continue;
      }
      pt.tau = flows.arrivals.rightmost_preimage(served, pt.sigma);
      const S arrival_rate = flows.arrivals.slope(pt.tau);
      if (arrival_rate > S(0)) {
        pt.tau_rate = flows.departures.slope(pt.sigma) * pt.sigma_rate / arrival_rate;
      } else {
        pt.tau_rate = pt.sigma_rate;
      }
    }
  }

 private:
  const TrafficState<S>& state_;
  const TreeNetwork<S>& net_;
  S queue_tol_;
};

}  // namespace

template <Scalar S>
int LagrangianView<S>::interval_of(const S& t) const {
  if (grid.size() < 2) throw DomainError("Lagrangian view has no intervals");
  if (t < grid.front() || t > grid.back()) {
    throw DomainError("time " + format_scalar(t) + " is outside the horizon");
  }
  const auto it = std::upper_bound(grid.begin(), grid.end(), t);
  const int k = static_cast<int>(it - grid.begin()) - 1;
  return std::min(k, interval_count() - 1);
}

template <Scalar S>
S LagrangianView<S>::evaluate(const std::vector<std::vector<LinearPiece<S>>>& table, int node,
                              const S& t) const {
  const int k = interval_of(t);
  const auto& piece = table.at(node).at(k);
  return piece.at((t - grid[k]) / interval_length(k));
}

template <Scalar S>
S LagrangianView<S>::subtree_inflow(int node, int k) const {
  S total(0);
  for (int j : scenario.topology().upstream(node)) total += inflow[j][k];
  return total;
}

template <Scalar S>
LagrangianView<S> LagrangianView<S>::zeros(Scenario<S> scenario, std::vector<S> grid) {
  LagrangianView view;
  const int n = scenario.size();
  const std::size_t intervals = grid.size() > 0 ? grid.size() - 1 : 0;
  view.scenario = std::move(scenario);
  view.grid = std::move(grid);
  const LinearPiece<S> zero{S(0), S(0)};
  view.tau.assign(n + 1, std::vector<LinearPiece<S>>(intervals, zero));
  view.sigma = view.tau;
  view.wait = view.tau;
  view.inflow.assign(n + 1, std::vector<S>(intervals, S(0)));
  return view;
}

template <Scalar S>
LagrangianView<S> lagrangian_view(const TrafficState<S>& state) {
  const Scenario<S>& scenario = state.scenario();
  const auto& net = scenario.network();
  const int n = scenario.size();
  const PathTracer<S> tracer(state);

  std::vector<S> candidates;
  for (int i = 1; i <= n; ++i) {
    const auto& flows = state.link(i);
    for (const auto& t : flows.arrivals.times()) {
      candidates.push_back(tracer.to_destination(i, tracer.departure_of(i, t)));
    }
    for (const auto& t : flows.departures.times()) {
      candidates.push_back(tracer.to_destination(i, t));
    }
    for (const auto& e : state.origin_inflow(i).breakpoints()) {
      candidates.push_back(
          tracer.to_destination(i, tracer.departure_of(i, S(e + net.free_flow(i)))));
    }
  }
  std::sort(candidates.begin(), candidates.end());
  const S gap = time_tolerance(scenario);
  std::vector<S> grid{scenario.t_start()};
  for (const auto& t : candidates) {
    if (t > grid.back() + gap && t < scenario.t_end() - gap) grid.push_back(t);
  }
  grid.push_back(scenario.t_end());

  LagrangianView<S> view = LagrangianView<S>::zeros(scenario, grid);
  std::vector<typename PathTracer<S>::Point> points;
  for (int k = 0; k < view.interval_count(); ++k) {
    const S half = view.interval_length(k) / S(2);
    const S mid = grid[k] + half;
    tracer.trace(mid, points);
    for (int i = 1; i <= n; ++i) {
      const auto& pt = points[i];
      view.sigma[i][k] = {pt.sigma - pt.sigma_rate * half, pt.sigma + pt.sigma_rate * half};
      view.tau[i][k] = {pt.tau - pt.tau_rate * half, pt.tau + pt.tau_rate * half};
      view.wait[i][k] = {view.sigma[i][k].start - view.tau[i][k].start,
                         view.sigma[i][k].end - view.tau[i][k].end};
      const S entry = pt.tau - net.free_flow(i);
      view.inflow[i][k] = state.origin_inflow(i).value(entry) * pt.tau_rate;
    }
  }

  S slack(0);
  if constexpr (!kIsExact<S>) slack = 1e-9 * std::max(1.0, scenario.horizon_length());
  for (int i = 1; i <= n; ++i) {
    for (int k = 0; k < view.interval_count(); ++k) {
      const auto& piece = view.tau[i][k];
      const bool decreasing_inside = piece.end < piece.start - slack;
      const bool decreasing_jump =
          k + 1 < view.interval_count() && view.tau[i][k + 1].start < piece.end - slack;
      if (decreasing_inside || decreasing_jump) {
        throw NonMonotoneError("arrival time at bottleneck " + std::to_string(i) +
                               " decreases near t = " + format_scalar(grid[k]));
      }
    }
  }
  return view;
}

#define DSO_TREE_INSTANTIATE(S)        \
  template struct LagrangianView<S>;   \
  template LagrangianView<S> lagrangian_view<S>(const TrafficState<S>&);

DSO_TREE_INSTANTIATE(double)
DSO_TREE_INSTANTIATE(Rational)

#undef DSO_TREE_INSTANTIATE

}  // namespace dso_tree
