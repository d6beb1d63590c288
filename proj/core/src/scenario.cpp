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

#include "dso_tree/scenario.hpp"

#include <cmath>
#include <string>

#include "dso_tree/errors.hpp"

namespace dso_tree {
namespace {

template <Scalar To, Scalar From>
To convert(const From& x) {
  if constexpr (std::same_as<To, From>) {
    return x;
  } else if constexpr (std::same_as<To, double>) {
    return to_double(x);
  } else {
    return shortest_rational(x);
  }
}

}  // namespace

template <Scalar S>
Scenario<S>::Scenario(TreeNetwork<S> network, std::vector<S> demand, ScheduleCost<S> cost,
                      S t_start, S t_end, S dt)
    : network_(std::move(network)),
      cost_(std::move(cost)),
      t_start_(std::move(t_start)),
      t_end_(std::move(t_end)),
      dt_(std::move(dt)) {
  const int n = network_.size();
  if (static_cast<int>(demand.size()) != n) {
    throw ValueError("expected " + std::to_string(n) + " demands, got " +
                     std::to_string(demand.size()));
  }
  demand_.assign(n + 1, S(0));
  for (int i = 1; i <= n; ++i) {
    if (demand[i - 1] < S(0)) {
      throw ValueError("demand of origin " + std::to_string(i) + " is negative");
    }
    demand_[i] = demand[i - 1];
  }
  if (!(dt_ > S(0))) throw ValueError("time step must be positive");
  if (!(t_end_ > t_start_)) throw ValueError("horizon must have positive length");

  const S ratio = (t_end_ - t_start_) / dt_;
  if (!is_integral(ratio)) {
    throw DomainError("time step " + format_scalar(dt_) + " does not divide horizon length " +
                      format_scalar(t_end_ - t_start_));
  }
  slot_count_ = static_cast<int>(to_integer(ratio));

  const S discharge = network_.root_capacity() * (t_end_ - t_start_);
  if (total_demand() > discharge) {
    throw InfeasibleError("total demand " + format_scalar(total_demand()) +
                          " exceeds destination discharge capacity " + format_scalar(discharge) +
                          " over the horizon");
  }
}

template <Scalar S>
const S& Scenario<S>::demand(int node) const {
  if (!network_.topology().contains(node)) {
    throw IndexError("unknown origin " + std::to_string(node));
  }
  return demand_[node];
}

template <Scalar S>
S Scenario<S>::total_demand() const {
  S total(0);
  for (const S& q : demand_) total += q;
  return total;
}

template <Scalar S>
Scenario<S> Scenario<S>::with_dt(S dt) const {
  return Scenario(network_, std::vector<S>(demand_.begin() + 1, demand_.end()), cost_, t_start_,
                  t_end_, std::move(dt));
}

template <Scalar S>
Scenario<S> Scenario<S>::with_horizon(S t_start, S t_end) const {
  return Scenario(network_, std::vector<S>(demand_.begin() + 1, demand_.end()), cost_,
                  std::move(t_start), std::move(t_end), dt_);
}

template <Scalar To, Scalar From>
Scenario<To> scenario_cast(const Scenario<From>& scenario) {
  const int n = scenario.size();
  std::vector<To> demand(n);
  for (int i = 1; i <= n; ++i) demand[i - 1] = convert<To>(scenario.demand(i));
  const auto& c = scenario.cost();
  ScheduleCost<To> cost(convert<To>(c.t_star), convert<To>(c.early_slope),
                        convert<To>(c.late_slope));
  return Scenario<To>(network_cast<To>(scenario.network()), std::move(demand), cost,
                      convert<To>(scenario.t_start()), convert<To>(scenario.t_end()),
                      convert<To>(scenario.dt()));
}

template class Scenario<double>;
template class Scenario<Rational>;
template Scenario<double> scenario_cast<double, double>(const Scenario<double>&);
template Scenario<double> scenario_cast<double, Rational>(const Scenario<Rational>&);
template Scenario<Rational> scenario_cast<Rational, double>(const Scenario<double>&);
template Scenario<Rational> scenario_cast<Rational, Rational>(const Scenario<Rational>&);

}  // namespace dso_tree
