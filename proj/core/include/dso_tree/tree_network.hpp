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

#ifndef DSO_TREE_TREE_NETWORK_HPP_
#define DSO_TREE_TREE_NETWORK_HPP_

#include <span>
#include <vector>

#include "dso_tree/scalar.hpp"

namespace dso_tree {

// Node 0 is the destination (root). Origins are labelled 1..N and link i is
// the edge from origin i to its parent. Per-node vectors in this library are
// indexed by node id and have size N + 1; slot 0 is unused unless stated.
class TreeTopology {
 public:
  TreeTopology() = default;

  // `parents[k]` is the parent of origin k + 1. Throws IndexError on parent
  // labels outside [0, N] and CycleError if some origin never reaches 0.
  explicit TreeTopology(std::span<const int> parents);

  int size() const { return static_cast<int>(parent_.size()) - 1; }
  bool contains(int node) const { return node >= 1 && node <= size(); }

  int parent(int node) const;
  // B(i): links entering node i. Valid for i = 0 as well.
  const std::vector<int>& children(int node) const;
  // Link i followed by every link on its path to the root.
  const std::vector<int>& downstream(int node) const;
  // Link i and every link in the subtree draining into it.
  const std::vector<int>& upstream(int node) const;
  // Number of links between i and the root, 1 for children of the root.
  int depth(int node) const;

  // Origins ordered leaves first (each child precedes its parent).
  const std::vector<int>& bottom_up() const { return bottom_up_; }
  // Origins ordered root first.
  const std::vector<int>& top_down() const { return top_down_; }

 private:
  void check_index(int node) const;

  std::vector<int> parent_;
  std::vector<std::vector<int>> children_;
  std::vector<std::vector<int>> downstream_;
  std::vector<std::vector<int>> upstream_;
  std::vector<int> depth_;
  std::vector<int> bottom_up_;
  std::vector<int> top_down_;
};

template <Scalar S>
class TreeNetwork {
 public:
  TreeNetwork() = default;

  // Element k of each span belongs to origin k + 1. Validates positivity
  // of capacities, nonnegative free-flow times and capacity monotonicity
  // (sum of child capacities never exceeds the parent link's capacity).
  TreeNetwork(std::span<const int> parents, std::span<const S> capacities,
              std::span<const S> free_flow_times);

  int size() const { return topology_.size(); }
  const TreeTopology& topology() const { return topology_; }

  const S& capacity(int node) const;
  const S& free_flow(int node) const;

  // Free-flow time strictly downstream of bottleneck i (excludes d_i).
  S downstream_free_flow(int node) const;
  // Free-flow time from origin i to the destination (includes d_i).
  S path_free_flow(int node) const;

  // Sum of capacities of the links entering the destination.
  S root_capacity() const;

 private:
  TreeTopology topology_;
  std::vector<S> capacity_;
  std::vector<S> free_flow_;
};

// Same construction as the TreeNetwork constructor, named after the
// operation.
template <Scalar S>
TreeNetwork<S> build_network(std::span<const int> parents, std::span<const S> capacities,
                             std::span<const S> free_flow_times) {
  return TreeNetwork<S>(parents, capacities, free_flow_times);
}

template <Scalar To, Scalar From>
TreeNetwork<To> network_cast(const TreeNetwork<From>& net);

}  // namespace dso_tree

#endif  // DSO_TREE_TREE_NETWORK_HPP_
