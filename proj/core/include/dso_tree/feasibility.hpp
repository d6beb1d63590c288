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

#ifndef DSO_TREE_FEASIBILITY_HPP_
#define DSO_TREE_FEASIBILITY_HPP_

#include <string>

#include "dso_tree/lagrangian_view.hpp"
#include "dso_tree/scalar.hpp"
#include "dso_tree/traffic_state.hpp"

namespace dso_tree {

struct ConstraintVerdict {
  std::string name;
  bool pass = true;
  double worst_violation = 0.0;
  int link = 0;        // 0 when no violation was recorded
  double time = 0.0;   // destination arrival time of the worst violation
};

struct FeasibilityReport {
  ConstraintVerdict complementarity{"queueing_complementarity"};
  ConstraintVerdict demand{"demand_conservation"};
  ConstraintVerdict nonnegativity{"inflow_nonnegativity"};
  ConstraintVerdict slope{"arrival_time_slope"};

  bool feasible() const {
    return complementarity.pass && demand.pass && nonnegativity.pass && slope.pass;
  }
};

// Checks the constraints of the system-optimal program on every interval of
// the view:
//   complementarity  sum of q over the subtree of i equals mu_i * dsigma_i/dt
//                    where w_i > tol, and does not exceed it elsewhere;
//   demand           integral of q_i over the horizon equals Q_i;
//   nonnegativity    q_i >= -tol;
//   slope            sum of dw_j/dt over the downstream path of i stays
//                    below 1 - tol_strict (tol_strict = 1e-9, 0 when exact).
// Absolute tolerances are scaled by max(1, mu_i) or max(1, Q_i).
template <Scalar S>
FeasibilityReport check_feasibility(const LagrangianView<S>& view, const S& tol);

template <Scalar S>
FeasibilityReport check_feasibility(const TrafficState<S>& state, const S& tol);

}  // namespace dso_tree

#endif  // DSO_TREE_FEASIBILITY_HPP_
