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

#include "dso_tree/min_cost_flow.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <string>
#include <utility>

#include "dso_tree/errors.hpp"

namespace dso_tree {

template <Scalar S>
MinCostFlow<S>::MinCostFlow(int node_count)
    : adjacency_(node_count), potential_(node_count, S(0)) {}

template <Scalar S>
int MinCostFlow<S>::add_arc(int from, int to, std::optional<S> capacity, S cost) {
  if (from < 0 || from >= node_count() || to < 0 || to >= node_count()) {
    throw IndexError("arc endpoint outside the node range");
  }
  if (cost < S(0)) throw ValueError("min-cost flow arcs must have nonnegative cost");
  if (capacity && *capacity < S(0)) throw ValueError("arc capacity must be nonnegative");
  const int id = arc_count();
  arcs_.push_back(Arc{from, to, std::move(capacity), std::move(cost)});
  adjacency_[from].push_back(Residual{id, true});
  adjacency_[to].push_back(Residual{id, false});
  return id;
}

template <Scalar S>
std::optional<S> MinCostFlow<S>::room(const Residual& r) const {
  const Arc& a = arcs_[r.arc];
  if (!r.forward) return a.flow;
  if (!a.capacity) return std::nullopt;
  return *a.capacity - a.flow;
}

template <Scalar S>
bool MinCostFlow<S>::has_room(const Residual& r) const {
  const auto left = room(r);
  if (!left) return true;
  if constexpr (kIsExact<S>) {
    return *left > S(0);
  } else {
    return *left > 1e-12;
  }
}

template <Scalar S>
int MinCostFlow<S>::head(const Residual& r) const {
  return r.forward ? arcs_[r.arc].to : arcs_[r.arc].from;
}

template <Scalar S>
S MinCostFlow<S>::residual_cost(const Residual& r) const {
  return r.forward ? arcs_[r.arc].cost : S(-arcs_[r.arc].cost);
}

template <Scalar S>
void MinCostFlow<S>::shortest_paths(int root, std::vector<std::optional<S>>& dist,
                                    std::vector<std::optional<Residual>>& via) const {
  dist.assign(node_count(), std::nullopt);
  via.assign(node_count(), std::nullopt);
  using Entry = std::pair<S, int>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<Entry>> frontier;
  std::vector<bool> settled(node_count(), false);
  dist[root] = S(0);
  frontier.emplace(S(0), root);
  while (!frontier.empty()) {
    const auto [d, u] = frontier.top();
    frontier.pop();
    if (settled[u]) continue;
    settled[u] = true;
    for (const Residual& r : adjacency_[u]) {
      if (!has_room(r)) continue;
      const int v = head(r);
      if (settled[v]) continue;
      S reduced = residual_cost(r) + potential_[u] - potential_[v];
      if (reduced < S(0)) reduced = S(0);  // rounding noise in double mode
      const S candidate = d + reduced;
      if (!dist[v] || candidate < *dist[v]) {
        dist[v] = candidate;
        via[v] = r;
        frontier.emplace(candidate, v);
      }
    }
  }
}

template <Scalar S>
S MinCostFlow<S>::solve(int source, int sink, const S& amount) {
  S sent(0);
  S remaining = amount;
  S stop(0);
  if constexpr (!kIsExact<S>) stop = 1e-12 * std::max(1.0, amount);

  std::vector<std::optional<S>> dist;
  std::vector<std::optional<Residual>> via;
  while (remaining > stop) {
    shortest_paths(source, dist, via);
    if (!dist[sink]) break;

    S farthest(0);
    for (const auto& d : dist) {
      if (d) farthest = std::max(farthest, *d);
    }
    for (int v = 0; v < node_count(); ++v) potential_[v] += dist[v] ? *dist[v] : farthest;

    S push = remaining;
    for (int v = sink; v != source;) {
      const Residual& r = *via[v];
      if (const auto left = room(r)) push = std::min(push, *left);
      v = r.forward ? arcs_[r.arc].from : arcs_[r.arc].to;
    }
    for (int v = sink; v != source;) {
      const Residual& r = *via[v];
      Arc& a = arcs_[r.arc];
      if (r.forward) {
        a.flow += push;
      } else {
        a.flow -= push;
      }
      v = r.forward ? a.from : a.to;
    }
    sent += push;
    remaining -= push;
    ++augmentations_;
  }
  return sent;
}

template <Scalar S>
std::vector<std::optional<S>> MinCostFlow<S>::residual_distances_from(int root) const {
  std::vector<std::optional<S>> reduced;
  std::vector<std::optional<Residual>> via;
  shortest_paths(root, reduced, via);
  std::vector<std::optional<S>> dist(node_count());
  for (int v = 0; v < node_count(); ++v) {
    if (reduced[v]) dist[v] = *reduced[v] - potential_[root] + potential_[v];
  }
  return dist;
}

template class MinCostFlow<double>;
template class MinCostFlow<Rational>;

}  // namespace dso_tree
