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

#include <vector>

#include "dso_tree/dso_solver.hpp"

int main() {
  using dso_tree::Rational;
  const std::vector<int> parents{0};
  const std::vector<Rational> mu{Rational(1)};
  const std::vector<Rational> d{Rational(0)};
  const dso_tree::Scenario<Rational> scenario(
      dso_tree::TreeNetwork<Rational>(parents, mu, d), {Rational(2)},
      dso_tree::ScheduleCost<Rational>(Rational(0), Rational(1), Rational(1)), Rational(-2),
      Rational(2), Rational(1, 2));
  return dso_tree::solve(scenario).objective == Rational(1) ? 0 : 1;
}
