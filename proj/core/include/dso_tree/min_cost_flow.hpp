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

#ifndef DSO_TREE_MIN_COST_FLOW_HPP_
#define DSO_TREE_MIN_COST_FLOW_HPP_

#include <optional>
#include <vector>

#include "dso_tree/scalar.hpp"

namespace dso_tree {

// Successive-shortest-path min-cost flow with Johnson potentials. Arc costs
// must be nonnegative. Dijkstra breaks distance ties toward the lower node
// index, so callers control tie-breaking through their node numbering.
template <Scalar S>
class MinCostFlow {
 public:
  explicit MinCostFlow(int node_count);

  // `capacity` of nullopt means unbounded. Returns the arc id.
  int add_arc(int from, int to, std::optional<S> capacity, S cost);

  // Sends up to `amount` units from source to sink along successive
  // cheapest augmenting paths. Returns the amount actually sent.
  S solve(int source, int sink, const S& amount);

  int node_count() const { return static_cast<int>(adjacency_.size()); }
  int arc_count() const { return static_cast<int>(arcs_.size()); }
  const S& flow(int arc) const { return arcs_.at(arc).flow; }
  const S& cost(int arc) const { return arcs_.at(arc).cost; }
  int augmentations() const { return augmentations_; }

  // Cheapest residual-path cost from `root` to every node (nullopt when
  // unreachable). Valid after solve(): uses the final potentials, so it runs
  // Dijkstra on nonnegative reduced costs.
  std::vector<std::optional<S>> residual_distances_from(int root) const;

 private:
  struct Arc {
    int from;
    int to;
    std::optional<S> capacity;
    S cost;
    S flow{0};
  };
  // A residual edge: forward use of an arc, or cancellation of its flow.
  struct Residual {
    int arc;
    bool forward;
  };

  bool has_room(const Residual& r) const;
  std::optional<S> room(const Residual& r) const;
  int head(const Residual& r) const;
  S residual_cost(const Residual& r) const;

  // Dijkstra over reduced costs. Fills distance and the residual edge used
  // to reach each node.
  void shortest_paths(int root, std::vector<std::optional<S>>& dist,
                      std::vector<std::optional<Residual>>& via) const;

  std::vector<Arc> arcs_;
  std::vector<std::vector<Residual>> adjacency_;
  std::vector<S> potential_;
  int augmentations_ = 0;
};

}  // namespace dso_tree

#endif  // DSO_TREE_MIN_COST_FLOW_HPP_
