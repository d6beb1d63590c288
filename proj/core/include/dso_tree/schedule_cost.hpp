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

#ifndef DSO_TREE_SCHEDULE_COST_HPP_
#define DSO_TREE_SCHEDULE_COST_HPP_

#include "dso_tree/errors.hpp"
#include "dso_tree/scalar.hpp"

namespace dso_tree {

// Two-slope schedule delay cost c(t) = beta * (t* - t)^+ + gamma * (t - t*)^+.
template <Scalar S>
struct ScheduleCost {
  S t_star{0};
  S early_slope{1};
  S late_slope{1};

  ScheduleCost() = default;
  ScheduleCost(S preferred, S beta, S gamma)
      : t_star(std::move(preferred)), early_slope(std::move(beta)), late_slope(std::move(gamma)) {
    if (!(early_slope > S(0)) || !(late_slope > S(0))) {
      throw ValueError("schedule cost slopes must be positive");
    }
  }

  S operator()(const S& t) const {
    return t < t_star ? S(early_slope * (t_star - t)) : S(late_slope * (t - t_star));
  }

  // Exact integral of c over [a, b].
  S integral(const S& a, const S& b) const { return primitive(b) - primitive(a); }

  // Mean of c over [a, b]; c(a) when the interval is degenerate.
  S average(const S& a, const S& b) const {
    if (b == a) return (*this)(a);
    return integral(a, b) / (b - a);
  }

 private:
  // Antiderivative anchored at t*.
  S primitive(const S& t) const {
    const S offset = t - t_star;
    if (offset >= S(0)) return late_slope * offset * offset / S(2);
    return -(early_slope * offset * offset / S(2));
  }
};

// Shorthand for evaluating a schedule cost at a time.
template <Scalar S>
S schedule_cost(const ScheduleCost<S>& cost, const S& t) {
  return cost(t);
}

}  // namespace dso_tree

#endif  // DSO_TREE_SCHEDULE_COST_HPP_
