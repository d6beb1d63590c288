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

#include "dso_tree/tree_network.hpp"

#include <algorithm>
#include <string>

#include "dso_tree/errors.hpp"

namespace dso_tree {

TreeTopology::TreeTopology(std::span<const int> parents) {
  const int n = static_cast<int>(parents.size());
  if (n == 0) throw ValueError("network must contain at least one origin");
  parent_.assign(n + 1, -1);
  children_.assign(n + 1, {});
  for (int i = 1; i <= n; ++i) {
    const int p = parents[i - 1];
    if (p < 0 || p > n) {
      throw IndexError("parent " + std::to_string(p) + " of origin " + std::to_string(i) +
                       " is outside [0, " + std::to_string(n) + "]");
    }
    if (p == i) throw CycleError("origin " + std::to_string(i) + " is its own parent");
    parent_[i] = p;
    children_[p].push_back(i);
  }

  // Walk each origin to the root; a walk longer than n links means a cycle.
  depth_.assign(n + 1, 0);
  downstream_.assign(n + 1, {});
  for (int i = 1; i <= n; ++i) {
    std::vector<int> path;
    int node = i;
    while (node != 0) {
      path.push_back(node);
      if (static_cast<int>(path.size()) > n) {
        throw CycleError("parent map contains a cycle through origin " + std::to_string(i));
      }
      node = parent_[node];
    }
    depth_[i] = static_cast<int>(path.size());
    downstream_[i] = std::move(path);
  }

  upstream_.assign(n + 1, {});
  for (int i = 1; i <= n; ++i) {
    for (int j : downstream_[i]) upstream_[j].push_back(i);
  }
  for (auto& set : upstream_) std::sort(set.begin(), set.end());

  top_down_.resize(n);
  for (int i = 1; i <= n; ++i) top_down_[i - 1] = i;
  std::stable_sort(top_down_.begin(), top_down_.end(),
                   [this](int a, int b) { return depth_[a] < depth_[b]; });
  bottom_up_.assign(top_down_.rbegin(), top_down_.rend());
}

void TreeTopology::check_index(int node) const {
  if (!contains(node)) throw IndexError("unknown origin " + std::to_string(node));
}

int TreeTopology::parent(int node) const {
  check_index(node);
  return parent_[node];
}

const std::vector<int>& TreeTopology::children(int node) const {
  if (node != 0) check_index(node);
  return children_[node];
}

const std::vector<int>& TreeTopology::downstream(int node) const {
  check_index(node);
  return downstream_[node];
}

const std::vector<int>& TreeTopology::upstream(int node) const {
  check_index(node);
  return upstream_[node];
}

int TreeTopology::depth(int node) const {
  check_index(node);
  return depth_[node];
}

template <Scalar S>
TreeNetwork<S>::TreeNetwork(std::span<const int> parents, std::span<const S> capacities,
                            std::span<const S> free_flow_times) {
  if (capacities.size() != parents.size() || free_flow_times.size() != parents.size()) {
    throw ValueError("parent, capacity and free-flow arrays must have equal length");
  }
  topology_ = TreeTopology(parents);
  const int n = topology_.size();
  capacity_.assign(n + 1, S(0));
  free_flow_.assign(n + 1, S(0));
  for (int i = 1; i <= n; ++i) {
    capacity_[i] = capacities[i - 1];
    free_flow_[i] = free_flow_times[i - 1];
    if (!(capacity_[i] > S(0))) {
      throw ValueError("capacity of link " + std::to_string(i) + " must be positive, got " +
                       format_scalar(capacity_[i]));
    }
    if (free_flow_[i] < S(0)) {
      throw ValueError("free-flow time of link " + std::to_string(i) +
                       " must be nonnegative, got " + format_scalar(free_flow_[i]));
    }
  }
  for (int i = 1; i <= n; ++i) {
    S inflow_capacity(0);
    for (int j : topology_.children(i)) inflow_capacity += capacity_[j];
    if (inflow_capacity > capacity_[i]) {
      throw CapacityError("children of link " + std::to_string(i) + " have total capacity " +
                          format_scalar(inflow_capacity) + " exceeding its capacity " +
                          format_scalar(capacity_[i]));
    }
  }
}

template <Scalar S>
const S& TreeNetwork<S>::capacity(int node) const {
  if (!topology_.contains(node)) throw IndexError("unknown origin " + std::to_string(node));
  return capacity_[node];
}

template <Scalar S>
const S& TreeNetwork<S>::free_flow(int node) const {
  if (!topology_.contains(node)) throw IndexError("unknown origin " + std::to_string(node));
  return free_flow_[node];
}

template <Scalar S>
S TreeNetwork<S>::downstream_free_flow(int node) const {
  S total(0);
  for (int j : topology_.downstream(node)) {
    if (j != node) total += free_flow_[j];
  }
  return total;
}

template <Scalar S>
S TreeNetwork<S>::path_free_flow(int node) const {
  return downstream_free_flow(node) + free_flow(node);
}

template <Scalar S>
S TreeNetwork<S>::root_capacity() const {
  S total(0);
  for (int j : topology_.children(0)) total += capacity_[j];
  return total;
}

template <Scalar To, Scalar From>
TreeNetwork<To> network_cast(const TreeNetwork<From>& net) {
  const int n = net.size();
  std::vector<int> parents(n);
  std::vector<To> mu(n);
  std::vector<To> d(n);
  for (int i = 1; i <= n; ++i) {
    parents[i - 1] = net.topology().parent(i);
    if constexpr (std::same_as<To, From>) {
      mu[i - 1] = net.capacity(i);
      d[i - 1] = net.free_flow(i);
    } else if constexpr (std::same_as<To, double>) {
      mu[i - 1] = to_double(net.capacity(i));
      d[i - 1] = to_double(net.free_flow(i));
    } else {
      mu[i - 1] = shortest_rational(net.capacity(i));
      d[i - 1] = shortest_rational(net.free_flow(i));
    }
  }
  return TreeNetwork<To>(parents, mu, d);
}

template class TreeNetwork<double>;
template class TreeNetwork<Rational>;
template TreeNetwork<double> network_cast<double, double>(const TreeNetwork<double>&);
template TreeNetwork<double> network_cast<double, Rational>(const TreeNetwork<Rational>&);
template TreeNetwork<Rational> network_cast<Rational, double>(const TreeNetwork<double>&);
template TreeNetwork<Rational> network_cast<Rational, Rational>(const TreeNetwork<Rational>&);

}  // namespace dso_tree
