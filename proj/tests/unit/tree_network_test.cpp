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

#include <vector>

#include "dso_tree/errors.hpp"
#include "dso_tree/tree_network.hpp"

namespace dso_tree {
namespace {

// 1 and 2 feed 3; 4 feeds 1.
const std::vector<int> kParents{3, 3, 0, 1};

TEST(TreeTopology, Relations) {
  const TreeTopology t(kParents);
  EXPECT_EQ(t.size(), 4);
  EXPECT_EQ(t.parent(4), 1);
  EXPECT_EQ(t.children(0), std::vector<int>({3}));
  EXPECT_EQ(t.children(3), std::vector<int>({1, 2}));
  EXPECT_EQ(t.downstream(4), std::vector<int>({4, 1, 3}));
  EXPECT_EQ(t.upstream(3), std::vector<int>({1, 2, 3, 4}));
  EXPECT_EQ(t.upstream(2), std::vector<int>({2}));
  EXPECT_EQ(t.depth(3), 1);
  EXPECT_EQ(t.depth(4), 3);
}

TEST(TreeTopology, OrdersRespectParents) {
  const TreeTopology t(kParents);
  std::vector<int> pos(5);
  for (int k = 0; k < 4; ++k) pos[t.bottom_up()[k]] = k;
  for (int i = 1; i <= 4; ++i) {
    if (t.parent(i) != 0) {
      EXPECT_LT(pos[i], pos[t.parent(i)]);
    }
  }
  EXPECT_EQ(t.top_down().front(), 3);
}

TEST(TreeTopology, RejectsCyclesAndBadLabels) {
  EXPECT_THROW(TreeTopology(std::vector<int>{2, 1}), CycleError);
  EXPECT_THROW(TreeTopology(std::vector<int>{1}), CycleError);
  EXPECT_THROW(TreeTopology(std::vector<int>{5}), IndexError);
  EXPECT_THROW(TreeTopology(std::vector<int>{-1}), IndexError);
  EXPECT_THROW(TreeTopology(kParents).parent(9), IndexError);
}

TEST(TreeNetwork, FreeFlowSums) {
  const std::vector<double> mu{1, 1, 2, 1};
  const std::vector<double> d{1, 2, 1, 0.5};
  const TreeNetwork<double> net(kParents, mu, d);
  EXPECT_DOUBLE_EQ(net.path_free_flow(4), 2.5);
  EXPECT_DOUBLE_EQ(net.downstream_free_flow(4), 2.0);
  EXPECT_DOUBLE_EQ(net.path_free_flow(2), 3.0);
  EXPECT_DOUBLE_EQ(net.root_capacity(), 2.0);
}

TEST(TreeNetwork, ValidatesCapacities) {
  const std::vector<int> chain{0, 1};
  EXPECT_THROW(TreeNetwork<double>(chain, std::vector<double>{1, 2}, std::vector<double>{0, 0}),
               CapacityError);
  EXPECT_NO_THROW(TreeNetwork<double>(chain, std::vector<double>{2, 2}, std::vector<double>{0, 0}));
  EXPECT_THROW(TreeNetwork<double>(chain, std::vector<double>{2, 0}, std::vector<double>{0, 0}),
               ValueError);
  EXPECT_THROW(TreeNetwork<double>(chain, std::vector<double>{2, 1}, std::vector<double>{0, -1}),
               ValueError);
  EXPECT_THROW(TreeNetwork<double>(chain, std::vector<double>{2}, std::vector<double>{0, 0}),
               ValueError);
}

TEST(TreeNetwork, ExactCapacityBoundaryIsAllowed) {
  const std::vector<Rational> mu{Rational(1, 3), Rational(2, 3), Rational(1)};
  const std::vector<Rational> d(3, Rational(0));
  EXPECT_NO_THROW(TreeNetwork<Rational>(std::vector<int>{3, 3, 0}, mu, d));
  const auto cast = network_cast<double>(TreeNetwork<Rational>(std::vector<int>{3, 3, 0}, mu, d));
  EXPECT_NEAR(cast.capacity(1), 1.0 / 3.0, 1e-15);
}

}  // namespace
}  // namespace dso_tree
