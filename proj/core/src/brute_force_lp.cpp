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

#include "dso_tree/brute_force_lp.hpp"

#include <algorithm>
#include <optional>
#include <string>

#include "dso_tree/errors.hpp"

namespace dso_tree {
namespace {

template <Scalar S>
class Enumerator {
 public:
  Enumerator(const Scenario<S>& scenario, long long limit)
      : scenario_(scenario), n_(scenario.size()), slots_(scenario.slot_count()), limit_(limit) {
    const auto& net = scenario.network();
    const auto& topo = scenario.topology();
    demand_.assign(n_ + 1, 0);
    capacity_.assign(n_ + 1, 0);
    for (int i = 1; i <= n_; ++i) {
      demand_[i] = integral("demand of origin " + std::to_string(i), scenario.demand(i));
      capacity_[i] = integral("slot capacity of link " + std::to_string(i),
                              S(net.capacity(i) * scenario.dt()));
    }
    // Per-commuter cost, rebuilt from the raw inputs: walk parents for the
    // free-flow time instead of trusting path_free_flow.
    unit_cost_.assign(n_ + 1, std::vector<S>(slots_, S(0)));
    for (int i = 1; i <= n_; ++i) {
      S travel(0);
      for (int j = i; j != 0; j = topo.parent(j)) travel += net.free_flow(j);
      for (int k = 0; k < slots_; ++k) {
        unit_cost_[i][k] =
            scenario.cost().average(scenario.slot_start(k), scenario.slot_end(k)) + travel;
      }
    }
    load_.assign(n_ + 1, std::vector<long long>(slots_, 0));
    current_.assign(n_ + 1, std::vector<long long>(slots_, 0));
  }

  BruteForceResult<S> run() {
    visit(1, 0, n_ >= 1 ? demand_[1] : 0, S(0));
    BruteForceResult<S> out;
    out.candidates = candidates_;
    if (!best_cost_) return out;  // only reachable when nothing is feasible
    out.objective = *best_cost_;
    out.q.assign(n_ + 1, std::vector<S>(slots_, S(0)));
    for (int i = 1; i <= n_; ++i) {
      for (int k = 0; k < slots_; ++k) out.q[i][k] = S(best_[i][k]);
    }
    return out;
  }

  bool found() const { return best_cost_.has_value(); }

 private:
  long long integral(const std::string& what, const S& value) const {
    if (!is_integral(value)) {
      throw DomainError(what + " is " + format_scalar(value) +
                        "; exhaustive search needs integral volumes");
    }
    return to_integer(value);
  }

  long long headroom(int origin, int slot) const {
    long long room = capacity_[origin] - load_[origin][slot];
    for (int j = scenario_.topology().parent(origin); j != 0; j = scenario_.topology().parent(j)) {
      room = std::min(room, capacity_[j] - load_[j][slot]);
    }
    return room;
  }

  void place(int origin, int slot, long long volume) {
    current_[origin][slot] += volume;
    for (int j = origin; j != 0; j = scenario_.topology().parent(j)) load_[j][slot] += volume;
  }

  void visit(int origin, int slot, long long remaining, const S& cost) {
    if (origin > n_) {
      if (++candidates_ > limit_) {
        throw TooLargeError("exhaustive search exceeded " + std::to_string(limit_) +
                            " candidate allocations");
      }
      if (!best_cost_ || cost < *best_cost_) {
        best_cost_ = cost;
        best_ = current_;
      }
      return;
    }
    if (slot == slots_) {
      if (remaining == 0) visit(origin + 1, 0, origin + 1 <= n_ ? demand_[origin + 1] : 0, cost);
      return;
    }
    const long long top = std::min(remaining, headroom(origin, slot));
    for (long long v = 0; v <= top; ++v) {
      place(origin, slot, v);
      visit(origin, slot + 1, remaining - v, cost + unit_cost_[origin][slot] * S(v));
      place(origin, slot, -v);
    }
  }

  const Scenario<S>& scenario_;
  int n_;
  int slots_;
  long long limit_;
  std::vector<long long> demand_;
  std::vector<long long> capacity_;
  std::vector<std::vector<S>> unit_cost_;
  std::vector<std::vector<long long>> load_;
  std::vector<std::vector<long long>> current_;
  std::vector<std::vector<long long>> best_;
  std::optional<S> best_cost_;
  long long candidates_ = 0;
};

}  // namespace

template <Scalar S>
BruteForceResult<S> brute_force_lp(const Scenario<S>& scenario, long long limit) {
  Enumerator<S> search(scenario, limit);
  BruteForceResult<S> result = search.run();
  if (!search.found()) {
    throw InfeasibleError("no integral allocation fits the demand through the network");
  }
  return result;
}

template BruteForceResult<double> brute_force_lp<double>(const Scenario<double>&, long long);
template BruteForceResult<Rational> brute_force_lp<Rational>(const Scenario<Rational>&, long long);

}  // namespace dso_tree
