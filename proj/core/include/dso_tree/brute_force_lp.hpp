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

#ifndef DSO_TREE_BRUTE_FORCE_LP_HPP_
#define DSO_TREE_BRUTE_FORCE_LP_HPP_

#include <vector>

#include "dso_tree/scalar.hpp"
#include "dso_tree/scenario.hpp"

namespace dso_tree {

template <Scalar S>
struct BruteForceResult {
  S objective{0};
  std::vector<std::vector<S>> q;  // [node][slot], same layout as LpSolution
  long long candidates = 0;       // complete allocations examined
};

inline constexpr long long kBruteForceLimit = 10'000'000;

// Exhaustive search over integral slot volumes. Every origin demand and
// every per-slot link capacity mu_i * dt must be an integer. Allocations
// are enumerated origin by origin, slot by slot, skipping any partial
// allocation that already overloads a link; the cheapest complete one wins
// and ties keep the first found.
//
// Throws DomainError on non-integral data and TooLargeError once more than
// `limit` complete allocations have been examined.
template <Scalar S>
BruteForceResult<S> brute_force_lp(const Scenario<S>& scenario,
                                   long long limit = kBruteForceLimit);

}  // namespace dso_tree

#endif  // DSO_TREE_BRUTE_FORCE_LP_HPP_
