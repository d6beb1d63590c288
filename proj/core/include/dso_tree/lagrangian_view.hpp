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

#ifndef DSO_TREE_LAGRANGIAN_VIEW_HPP_
#define DSO_TREE_LAGRANGIAN_VIEW_HPP_

#include <vector>

#include "dso_tree/scalar.hpp"
#include "dso_tree/scenario.hpp"
#include "dso_tree/traffic_state.hpp"

namespace dso_tree {

// Values of a linear piece at the left and right ends of one grid interval.
template <Scalar S>
struct LinearPiece {
  S start;
  S end;

  S at(const S& fraction) const { return start + (end - start) * fraction; }
  S mean() const { return (start + end) / S(2); }
};

// Trip variables indexed by destination arrival time t over the horizon.
// Between consecutive grid points every quantity is linear (tau, sigma, w)
// or constant (q); tau and w may jump at grid points.
//
// All per-link tables are indexed [node id][interval]; row 0 is unused.
template <Scalar S>
struct LagrangianView {
  Scenario<S> scenario;
  std::vector<S> grid;
  std::vector<std::vector<LinearPiece<S>>> tau;    // arrival at bottleneck i
  std::vector<std::vector<LinearPiece<S>>> sigma;  // departure from bottleneck i
  std::vector<std::vector<LinearPiece<S>>> wait;   // w_i = sigma_i - tau_i
  std::vector<std::vector<S>> inflow;              // q_i, commuters per unit t

  int interval_count() const { return static_cast<int>(grid.size()) - 1; }
  S interval_length(int k) const { return grid[k + 1] - grid[k]; }
  // Interval containing t (right-open; the final point maps to the last).
  int interval_of(const S& t) const;

  S slope(const LinearPiece<S>& piece, int k) const {
    return (piece.end - piece.start) / interval_length(k);
  }

  S tau_at(int node, const S& t) const { return evaluate(tau, node, t); }
  S sigma_at(int node, const S& t) const { return evaluate(sigma, node, t); }
  S wait_at(int node, const S& t) const { return evaluate(wait, node, t); }
  S inflow_at(int node, const S& t) const { return inflow.at(node).at(interval_of(t)); }

  // Sum of q_j over the subtree draining into link i, on interval k.
  S subtree_inflow(int node, int k) const;

  // Empty view for `scenario` on `grid`, all tables zero.
  static LagrangianView zeros(Scenario<S> scenario, std::vector<S> grid);

 private:
  S evaluate(const std::vector<std::vector<LinearPiece<S>>>& table, int node, const S& t) const;
};

// Traces every destination arrival time back through the tree. The grid
// holds the forward images of all Eulerian breakpoints, so each interval is
// a region where the backward trace is linear.
//
// Throws NonMonotoneError if a recovered tau_i decreases anywhere.
template <Scalar S>
LagrangianView<S> lagrangian_view(const TrafficState<S>& state);

}  // namespace dso_tree

#endif  // DSO_TREE_LAGRANGIAN_VIEW_HPP_
