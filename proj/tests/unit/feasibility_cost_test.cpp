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

#include <random>

#include "dso_tree/cost.hpp"
#include "dso_tree/feasibility.hpp"
#include "dso_tree/verification.hpp"
#include "instances.hpp"

namespace dso_tree {
namespace {

using R = Rational;
using testing::single_inflow;
using testing::single_link;

TEST(Feasibility, SimulatedStatesPass) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    const auto sc = testing::random_tree_scenario<double>(rng, 6);
    const auto report = check_feasibility(sample_feasible_state(sc, rng), 1e-9);
    EXPECT_TRUE(report.feasible()) << report.complementarity.worst_violation << " "
                                   << report.slope.worst_violation;
  }
}

// Hand-built view on a unit bottleneck: a queue of 1 with inflow mu/2.
TEST(Feasibility, ComplementarityViolation) {
  const auto sc = single_link<R>(R(1), R(0), R(1), R(0), R(2), R(1));
  auto view = LagrangianView<R>::zeros(sc, {R(0), R(2)});
  view.sigma[1][0] = {R(0), R(2)};
  view.tau[1][0] = {R(-1), R(1)};
  view.wait[1][0] = {R(1), R(1)};
  view.inflow[1][0] = R(1, 2);
  const auto report = check_feasibility(view, R(0));
  EXPECT_FALSE(report.complementarity.pass);
  EXPECT_EQ(report.complementarity.link, 1);
  EXPECT_EQ(report.complementarity.worst_violation, 0.5);
  EXPECT_TRUE(report.demand.pass);
}

TEST(Feasibility, DemandViolation) {
  const auto sc = single_link<R>(R(1), R(0), R(2), R(0), R(2), R(1));
  auto view = LagrangianView<R>::zeros(sc, {R(0), R(2)});
  view.sigma[1][0] = {R(0), R(2)};
  view.tau[1][0] = {R(0), R(2)};
  view.inflow[1][0] = R(1, 2);
  const auto report = check_feasibility(view, R(0));
  EXPECT_FALSE(report.demand.pass);
  EXPECT_EQ(report.demand.worst_violation, 1.0);
  EXPECT_TRUE(report.complementarity.pass);
  EXPECT_TRUE(report.nonnegativity.pass);
}

TEST(Feasibility, SlopeAndSignViolations) {
  const auto sc = single_link<R>(R(1), R(0), R(0), R(0), R(2), R(1));
  auto view = LagrangianView<R>::zeros(sc, {R(0), R(2)});
  view.sigma[1][0] = {R(0), R(2)};
  view.tau[1][0] = {R(0), R(0)};
  view.wait[1][0] = {R(0), R(2)};  // dw/dt = 1, not strictly below 1
  view.inflow[1][0] = R(-1, 10);
  const auto report = check_feasibility(view, R(0));
  EXPECT_FALSE(report.slope.pass);
  EXPECT_FALSE(report.nonnegativity.pass);
}

TEST(TotalCost, SingleLinkExamples) {
  const auto sc = single_link<R>(R(1), R(0), R(2), R(0), R(3), R(1));
  // c identically zero is not expressible with positive slopes, so take
  // the queueing component alone.
  const auto queued = total_cost(simulate(sc, single_inflow<R>(1, 1, R(0), R(1), R(2))));
  EXPECT_EQ(queued.queueing, R(1));
  EXPECT_EQ(queued.free_flow, R(0));
  const auto smooth = total_cost(simulate(sc, single_inflow<R>(1, 1, R(0), R(2), R(1))));
  EXPECT_EQ(smooth.queueing, R(0));
  // Same destination arrivals, so the schedule part is unchanged: 2.
  EXPECT_EQ(queued.schedule, R(2));
  EXPECT_EQ(smooth.schedule, R(2));
  EXPECT_EQ(queued.total, R(3));
}

TEST(TotalCost, ZeroDemand) {
  const auto sc = single_link<R>(R(1), R(1), R(0), R(0), R(3), R(1));
  const auto c = total_cost(simulate(sc, InflowProfiles<R>(2)));
  EXPECT_EQ(c.total, R(0));
  EXPECT_EQ(c.schedule, R(0));
}

TEST(TotalCost, FreeFlowTermCountsWholePath) {
  const std::vector<int> parents{0, 1};
  const std::vector<R> mu{R(2), R(1)};
  const std::vector<R> d{R(1), R(1, 2)};
  const Scenario<R> sc(TreeNetwork<R>(parents, mu, d), {R(0), R(1)},
                       ScheduleCost<R>(R(2), R(1), R(1)), R(0), R(4), R(1));
  const auto c = total_cost(simulate(sc, single_inflow<R>(2, 2, R(0), R(1), R(1))));
  EXPECT_EQ(c.free_flow, R(3, 2));
  EXPECT_EQ(c.queueing, R(0));
  // Arrivals spread over [3/2, 5/2] around t* = 2.
  EXPECT_EQ(c.schedule, R(1, 4));
}

// Lagrangian and Eulerian accountings agree exactly in exact mode.
TEST(TotalCostProperty, IndependentAccountingsAgree) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 15; ++trial) {
    const auto sc = testing::random_tree_scenario<R>(rng, 4);
    const auto state = sample_feasible_state(sc, rng);
    const auto lag = total_cost(state);
    const auto eul = eulerian_cost(state);
    EXPECT_EQ(lag.total, eul.total);
    EXPECT_EQ(lag.schedule, eul.schedule);
    EXPECT_EQ(lag.queueing, eul.queueing);
    EXPECT_EQ(lag.free_flow, eul.free_flow);
  }
}

}  // namespace
}  // namespace dso_tree
