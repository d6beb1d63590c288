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

#include "dso_tree/errors.hpp"
#include "dso_tree/lagrangian_view.hpp"
#include "dso_tree/verification.hpp"
#include "instances.hpp"

namespace dso_tree {
namespace {

using R = Rational;
using testing::single_inflow;
using testing::single_link;

// Commuter reaching the destination at t in [0,2] joined the queue at t/2.
TEST(LagrangianView, SingleLinkQueue) {
  const auto sc = single_link<R>(R(1), R(0), R(2), R(0), R(3), R(1));
  const auto view = lagrangian_view(simulate(sc, single_inflow<R>(1, 1, R(0), R(1), R(2))));
  for (const R& t : {R(0), R(1, 3), R(1), R(3, 2), R(19, 10)}) {
    EXPECT_EQ(view.tau_at(1, t), t / R(2));
    EXPECT_EQ(view.wait_at(1, t), t / R(2));
    EXPECT_EQ(view.sigma_at(1, t), t);
    EXPECT_EQ(view.inflow_at(1, t), R(1));
  }
  EXPECT_EQ(view.inflow_at(1, R(5, 2)), R(0));
  EXPECT_THROW(view.interval_of(R(4)), DomainError);
}

TEST(LagrangianView, NoQueueShiftsByFreeFlow) {
  // Chain: origin 2 feeds link 1, d = (1, 1/2).
  const std::vector<int> parents{0, 1};
  const std::vector<R> mu{R(2), R(1)};
  const std::vector<R> d{R(1), R(1, 2)};
  const Scenario<R> sc(TreeNetwork<R>(parents, mu, d), {R(0), R(1)},
                       ScheduleCost<R>(R(0), R(1), R(1)), R(0), R(4), R(1));
  const auto view = lagrangian_view(simulate(sc, single_inflow<R>(2, 2, R(0), R(1), R(1))));
  for (const R& t : {R(1, 2), R(2), R(7, 2)}) {
    EXPECT_EQ(view.wait_at(1, t), R(0));
    EXPECT_EQ(view.wait_at(2, t), R(0));
    EXPECT_EQ(view.sigma_at(1, t), t);
    EXPECT_EQ(view.sigma_at(2, t), t - R(1));
    EXPECT_EQ(view.tau_at(2, t), t - R(1));
  }
  // Commuters reach the destination during [3/2, 5/2].
  EXPECT_EQ(view.inflow_at(2, R(2)), R(1));
  EXPECT_EQ(view.inflow_at(2, R(1)), R(0));
}

// sigma_child = tau_parent - d_parent and w = sigma - tau, at random times.
TEST(LagrangianViewProperty, RecursionAndFifo) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    const auto sc = testing::random_tree_scenario<double>(rng, 5);
    const auto state = sample_feasible_state(sc, rng);
    const auto view = lagrangian_view(state);
    std::uniform_real_distribution<double> pick(sc.t_start(), sc.t_end());
    const double scale = std::max(1.0, sc.total_demand());
    for (int s = 0; s < 200; ++s) {
      const double t = pick(rng);
      for (int i = 1; i <= sc.size(); ++i) {
        const int parent = sc.topology().parent(i);
        const double expected_sigma =
            parent == 0 ? t : view.tau_at(parent, t) - sc.network().free_flow(parent);
        EXPECT_NEAR(view.sigma_at(i, t), expected_sigma, 1e-9);
        EXPECT_NEAR(view.wait_at(i, t), view.sigma_at(i, t) - view.tau_at(i, t), 1e-9);
        EXPECT_GE(view.wait_at(i, t), -1e-9);
        EXPECT_NEAR(state.link(i).arrivals.value(view.tau_at(i, t)) / scale,
                    state.link(i).departures.value(view.sigma_at(i, t)) / scale, 1e-9);
      }
    }
  }
}

// Subtree inflow equals the departure rate seen along the trace:
// sum of q over the subtree of i = x_i(sigma_i) * dsigma_i/dt.
TEST(LagrangianViewProperty, RecursiveFlowIdentity) {
  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 10; ++trial) {
    const auto sc = testing::random_tree_scenario<R>(rng, 4);
    const auto state = sample_feasible_state(sc, rng);
    const auto view = lagrangian_view(state);
    for (int k = 0; k < view.interval_count(); ++k) {
      for (int i = 1; i <= sc.size(); ++i) {
        const auto& sig = view.sigma[i][k];
        const R mid_sigma = sig.mean();
        const R rate = state.link(i).departure_rate.value(mid_sigma);
        EXPECT_EQ(view.subtree_inflow(i, k), rate * view.slope(sig, k))
            << "link " << i << " interval " << k;
      }
    }
    R delivered(0);
    for (int k = 0; k < view.interval_count(); ++k) {
      for (int i = 1; i <= sc.size(); ++i) delivered += view.inflow[i][k] * view.interval_length(k);
    }
    EXPECT_EQ(delivered, sc.total_demand());
  }
}

}  // namespace
}  // namespace dso_tree
