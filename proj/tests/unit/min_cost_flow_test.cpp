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

#include <gtest/gtest.h>

#include "dso_tree/errors.hpp"
#include "dso_tree/min_cost_flow.hpp"

namespace dso_tree {
namespace {

using R = Rational;

// Two routes from 0 to 3: cheap with capacity 1, dear and unbounded.
TEST(MinCostFlow, PrefersCheapRouteUntilFull) {
  MinCostFlow<R> f(4);
  const int a = f.add_arc(0, 1, R(1), R(1));
  const int b = f.add_arc(1, 3, std::nullopt, R(0));
  const int c = f.add_arc(0, 2, std::nullopt, R(5));
  const int d = f.add_arc(2, 3, std::nullopt, R(0));
  EXPECT_EQ(f.solve(0, 3, R(3)), R(3));
  EXPECT_EQ(f.flow(a), R(1));
  EXPECT_EQ(f.flow(b), R(1));
  EXPECT_EQ(f.flow(c), R(2));
  EXPECT_EQ(f.flow(d), R(2));
  EXPECT_EQ(f.augmentations(), 2);
}

TEST(MinCostFlow, ReroutesThroughResidualArcs) {
  // Classic case where the second path cancels part of the first.
  MinCostFlow<R> f(4);
  f.add_arc(0, 1, R(1), R(1));
  f.add_arc(0, 2, R(1), R(2));
  const int mid = f.add_arc(1, 2, R(1), R(0));
  f.add_arc(1, 3, R(1), R(2));
  f.add_arc(2, 3, R(1), R(1));
  EXPECT_EQ(f.solve(0, 3, R(2)), R(2));
  EXPECT_EQ(f.flow(mid), R(0));
  R total(0);
  for (int arc = 0; arc < f.arc_count(); ++arc) total += f.flow(arc) * f.cost(arc);
  EXPECT_EQ(total, R(6));
}

TEST(MinCostFlow, StopsWhenCutIsFull) {
  MinCostFlow<double> f(2);
  f.add_arc(0, 1, 1.5, 0.0);
  EXPECT_DOUBLE_EQ(f.solve(0, 1, 4.0), 1.5);
}

TEST(MinCostFlow, ResidualDistances) {
  MinCostFlow<R> f(3);
  f.add_arc(0, 1, std::nullopt, R(2));
  f.add_arc(1, 2, R(1), R(3));
  f.solve(0, 2, R(1));
  const auto from_sink = f.residual_distances_from(2);
  EXPECT_EQ(*from_sink[2], R(0));
  EXPECT_EQ(*from_sink[1], R(-3));
  EXPECT_EQ(*from_sink[0], R(-5));
  const auto from_source = f.residual_distances_from(0);
  EXPECT_EQ(*from_source[1], R(2));
  EXPECT_FALSE(from_source[2].has_value());
}

TEST(MinCostFlow, ValidatesArcs) {
  MinCostFlow<R> f(2);
  EXPECT_THROW(f.add_arc(0, 2, R(1), R(0)), IndexError);
  EXPECT_THROW(f.add_arc(0, 1, R(1), R(-1)), ValueError);
  EXPECT_THROW(f.add_arc(0, 1, R(-1), R(0)), ValueError);
}

}  // namespace
}  // namespace dso_tree
