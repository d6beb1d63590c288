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

#include "dso_tree/feasibility.hpp"

#include <algorithm>

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

}  // namespace

template <Scalar S>
FeasibilityReport check_feasibility(const LagrangianView<S>& view, const S& tol) {
  FeasibilityReport report;
  const auto& scenario = view.scenario;
  const auto& topo = scenario.topology();
  const int n = scenario.size();
  S strict_margin(0);
  if constexpr (!kIsExact<S>) strict_margin = 1e-9;

  for (int i = 1; i <= n; ++i) {
    const S& mu = scenario.network().capacity(i);
    const S cap_tol = tol * std::max(S(1), mu);
    S delivered(0);
    for (int k = 0; k < view.interval_count(); ++k) {
      const S& t = view.grid[k];
      const S h = view.interval_length(k);
      const S& q = view.inflow[i][k];
      delivered += q * h;

      // Queueing complementarity.
      const S lhs = view.subtree_inflow(i, k);
      const S rhs = mu * view.slope(view.sigma[i][k], k);
      const bool queued = view.wait[i][k].mean() > tol;
      const S excess = lhs - rhs;
      const S magnitude = queued ? abs_value(excess) : std::max(S(0), excess);
      record(report.complementarity, magnitude <= cap_tol, magnitude, i, t);

      record(report.nonnegativity, q >= -tol, std::max(S(0), S(-q)), i, t);

      S wait_rate(0);
      for (int j : topo.downstream(i)) wait_rate += view.slope(view.wait[j][k], k);
      const S bound = S(1) - strict_margin;
      record(report.slope, wait_rate < bound, std::max(S(0), S(wait_rate - bound)), i, t);
    }
    const S& demand = scenario.demand(i);
    const S gap = abs_value(S(delivered - demand));
    record(report.demand, gap <= tol * std::max(S(1), demand), gap, i, scenario.t_end());
  }
  return report;
}

template <Scalar S>
FeasibilityReport check_feasibility(const TrafficState<S>& state, const S& tol) {
  return check_feasibility(lagrangian_view(state), tol);
}

template FeasibilityReport check_feasibility<double>(const LagrangianView<double>&, const double&);
template FeasibilityReport check_feasibility<Rational>(const LagrangianView<Rational>&,
                                                       const Rational&);
template FeasibilityReport check_feasibility<double>(const TrafficState<double>&, const double&);
template FeasibilityReport check_feasibility<Rational>(const TrafficState<Rational>&,
                                                       const Rational&);

}  // namespace dso_tree
