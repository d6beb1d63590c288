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

// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any
// criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "dso_tree/brute_force_lp.hpp"
#include "dso_tree/cost.hpp"
#include "dso_tree/dso_solver.hpp"
#include "dso_tree/lagrangian_view.hpp"
#include "dso_tree/verification.hpp"
#include "instances.hpp"

namespace {

using dso_tree::Rational;
using namespace dso_tree;
using dso_tree::testing::num;

struct Outcome {
  bool pass = true;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// Criteria 1 and 2 share one sampling run.
struct SampledTrees {
  int trees = 0;
  int samples = 0;
  int queued = 0;
  int w_zero = 0;
  int schedule_ok = 0;
  int delta_ok = 0;
  int q_star_ok = 0;
  int lp_bound_ok = 0;
  int round_trips_ok = 0;
  int errors = 0;
  double worst_schedule_rel = 0;
  double worst_prediction_rel = 0;
  double worst_delta = -INFINITY;
  double min_lp_gap = INFINITY;
  double worst_round_trip = 0;
  double seconds = 0;
};

SampledTrees sample_random_trees() {
  SampledTrees run;
  const auto start = Clock::now();
  std::mt19937_64 rng(20261018);
  for (int tree = 0; tree < 20; ++tree) {
    const int n = std::uniform_int_distribution<int>(1, 10)(rng);
    const auto scenario = dso_tree::testing::random_tree_scenario<double>(rng, n);
    const VerificationReport report = verify_nonexistence(scenario, 100, 1000 + tree);
    ++run.trees;
    for (const auto& r : report.records) {
      ++run.samples;
      if (!r.error.empty()) {
        ++run.errors;
        continue;
      }
      const double scale = std::max(1.0, std::abs(r.original_cost));
      run.queued += r.original_cost - r.transformed_cost > 1e-9 * scale;
      run.w_zero += r.feasible;
      run.schedule_ok += r.schedule_ok;
      run.delta_ok += r.improvement_ok && r.prediction_ok;
      run.q_star_ok += r.nonnegative_ok;
      run.lp_bound_ok += r.lp_bound_ok;
      run.worst_schedule_rel = std::max(run.worst_schedule_rel, std::abs(r.schedule_delta) / scale);
      run.worst_prediction_rel =
          std::max(run.worst_prediction_rel, std::abs(r.cost_delta - r.predicted_delta) / scale);
      run.worst_delta = std::max(run.worst_delta, r.cost_delta);
      run.min_lp_gap = std::min(run.min_lp_gap, r.lp_gap);
    }
    if (report.round_trip.available && report.round_trip.gap <= 1e-6 &&
        report.round_trip.max_queue <= 1e-9) {
      ++run.round_trips_ok;
    }
    run.worst_round_trip = std::max(run.worst_round_trip, report.round_trip.gap);
  }
  run.seconds = seconds_since(start);
  return run;
}

Outcome criterion1(const SampledTrees& r) {
  Outcome o;
  o.pass = r.samples == 2000 && r.errors == 0 && r.w_zero == r.samples &&
           r.schedule_ok == r.samples && r.delta_ok == r.samples && r.q_star_ok == r.samples &&
           r.seconds < 60;
  std::ostringstream s;
  s << r.trees << " trees x 100 states, " << r.queued << " queued; w*=0 " << r.w_zero << "/"
    << r.samples << ", schedule " << r.schedule_ok << ", delta " << r.delta_ok << ", q*>=0 "
    << r.q_star_ok << ", errors " << r.errors << "; worst schedule rel " << r.worst_schedule_rel
    << ", worst |delta-predicted| rel " << r.worst_prediction_rel << ", max delta "
    << r.worst_delta << ", " << r.seconds << " s";
  o.detail = s.str();
  return o;
}

Outcome criterion2(const SampledTrees& r) {
  Outcome o;
  o.pass = r.lp_bound_ok == r.samples && r.round_trips_ok == r.trees;
  std::ostringstream s;
  s << "cost >= LP - 1e-6 on " << r.lp_bound_ok << "/" << r.samples << " (min gap " << r.min_lp_gap
    << "); LP round trip within 1e-6 on " << r.round_trips_ok << "/" << r.trees
    << " trees (worst " << r.worst_round_trip << ")";
  o.detail = s.str();
  return o;
}

struct IntegralRun {
  std::vector<Scenario<Rational>> scenarios;
  std::vector<LpSolution<Rational>> solutions;
};

IntegralRun integral_instances() {
  IntegralRun run;
  std::mt19937_64 rng(777);
  for (int k = 0; k < 50; ++k) {
    const int n = std::uniform_int_distribution<int>(1, 4)(rng);
    const int slots = std::uniform_int_distribution<int>(2, 8)(rng);
    run.scenarios.push_back(dso_tree::testing::random_integral_scenario<Rational>(rng, n, slots, 10));
  }
  return run;
}

Outcome criterion3(IntegralRun& run) {
  Outcome o;
  const auto start = Clock::now();
  int equal = 0;
  long long enumerated = 0;
  for (const auto& sc : run.scenarios) {
    run.solutions.push_back(solve(sc));
    const auto brute = brute_force_lp(sc);
    enumerated += brute.candidates;
    if (brute.objective == run.solutions.back().objective) {
      ++equal;
    } else {
      o.detail = "mismatch: solve " + format_scalar(run.solutions.back().objective) +
                 " vs brute force " + format_scalar(brute.objective) + "; ";
    }
  }
  const double secs = seconds_since(start);
  o.pass = equal == static_cast<int>(run.scenarios.size()) && secs < 30;
  o.detail += std::to_string(equal) + "/" + std::to_string(run.scenarios.size()) +
              " exact matches, " + std::to_string(enumerated) + " allocations enumerated, " +
              std::to_string(secs) + " s";
  return o;
}

Outcome criterion4() {
  Outcome o;
  std::ostringstream s;
  const auto base = dso_tree::testing::single_link<Rational>(
      Rational(1), Rational(0), Rational(2), Rational(-2), Rational(2), Rational(1, 2));
  const Rational unit = solve(base).objective;
  const Rational brute = brute_force_lp(base.with_dt(Rational(1))).objective;
  o.pass = unit == Rational(1) && brute == Rational(1);
  s << "base objective " << format_scalar(unit) << " (brute force " << format_scalar(brute)
    << "); ";

  std::mt19937_64 rng(4242);
  const Rational dt0(1, 4);
  int within = 0;
  double worst_ratio = 0;
  for (int draw = 0; draw < 10; ++draw) {
    const Rational beta(std::uniform_int_distribution<int>(2, 12)(rng), 4);
    const Rational gamma(std::uniform_int_distribution<int>(2, 12)(rng), 4);
    const Rational demand(std::uniform_int_distribution<int>(4, 16)(rng), 4);
    const Rational mu(std::uniform_int_distribution<int>(2, 8)(rng), 4);
    // Off the dyadic slot grid for every refinement.
    const Rational t_star(std::uniform_int_distribution<int>(-3, 3)(rng) * 2 + 1, 7);
    const Rational length = demand / mu;
    const long long half =
        static_cast<long long>(std::ceil(to_double(length))) + 1;
    const Rational delta = beta * gamma / (beta + gamma);
    const Rational analytic = delta * demand * demand / (Rational(2) * mu);
    const Rational slope = std::max(beta, gamma);
    bool ok = true;
    for (int level = 0; level < 3; ++level) {
      const Rational dt = dt0 / Rational(1 << level);
      const auto sc = dso_tree::testing::single_link<Rational>(mu, Rational(0), demand,
                                                               Rational(-half), Rational(half), dt,
                                                               t_star, beta, gamma);
      const Rational err = solve(sc).objective - analytic;
      // The bound shrinks linearly with dt: halving dt halves it.
      const Rational bound = Rational(2) * mu * slope * dt0 * dt;
      ok = ok && err >= Rational(0) && err <= bound;
      worst_ratio = std::max(worst_ratio, to_double(err / bound));
    }
    within += ok;
  }
  o.pass = o.pass && within == 10;
  s << within << "/10 draws satisfy 0 <= LP - dQ^2/(2mu) <= 2 mu max(beta,gamma) dt0 dt at dt = "
    << "1/4, 1/8, 1/16 (worst error/bound " << worst_ratio << ")";
  o.detail = s.str();
  return o;
}

Outcome criterion5(const IntegralRun& run) {
  Outcome o;
  int optimal = 0;
  int perturbed = 0;
  int caught = 0;
  for (std::size_t idx = 0; idx < run.scenarios.size(); ++idx) {
    const auto& sc = run.scenarios[idx];
    const auto& sol = run.solutions[idx];
    if (check_optimality(sol, sc, Rational(0)).optimal()) ++optimal;

    // Move one unit (or the whole volume if smaller) from a used slot to the
    // slot with the highest priced cost that is strictly above rho.
    const auto net = discretize(sc);
    bool done = false;
    for (int i = 1; i <= sc.size() && !done; ++i) {
      for (int k = 0; k < net.slots() && !done; ++k) {
        if (sol.q[i][k] <= Rational(0)) continue;
        int target = -1;
        Rational worst(0);
        for (int m = 0; m < net.slots(); ++m) {
          Rational priced = net.entry_cost(i, m);
          for (int j : sc.topology().downstream(i)) priced += sol.price[j][m];
          if (priced > sol.rho[i] && (target < 0 || priced > worst)) {
            target = m;
            worst = priced;
          }
        }
        if (target < 0) continue;
        LpSolution<Rational> moved = sol;
        const Rational unit = std::min(Rational(1), moved.q[i][k]);
        moved.q[i][k] -= unit;
        moved.q[i][target] += unit;
        ++perturbed;
        if (!check_optimality(moved, sc, Rational(0)).reduced_cost_equality.pass) ++caught;
        done = true;
      }
    }
  }
  o.pass = optimal == static_cast<int>(run.scenarios.size()) && perturbed > 0 &&
           caught == perturbed;
  o.detail = std::to_string(optimal) + "/" + std::to_string(run.scenarios.size()) +
             " optimal with zero tolerance; " + std::to_string(caught) + "/" +
             std::to_string(perturbed) + " perturbed solutions rejected by the equality branch";
  return o;
}

Outcome criterion6() {
  Outcome o;
  std::mt19937_64 rng(606);
  int cost_ok = 0;
  int fifo_ok = 0;
  double worst_cost = 0;
  double worst_fifo = 0;
  int states = 0;
  while (states < 100) {
    const int n = std::uniform_int_distribution<int>(1, 6)(rng);
    const auto sc = dso_tree::testing::random_tree_scenario<double>(rng, n);
    for (int rep = 0; rep < 10; ++rep, ++states) {
      const TrafficState<double> state = sample_feasible_state(sc, rng);
      const LagrangianView<double> view = lagrangian_view(state);
      const double lag = total_cost(view).total;
      const double eul = eulerian_cost(state).total;
      const double rel = std::abs(lag - eul) / std::max(1.0, std::abs(eul));
      worst_cost = std::max(worst_cost, rel);
      cost_ok += rel <= 1e-9;

      const double scale = std::max(1.0, sc.total_demand());
      std::uniform_real_distribution<double> pick(sc.t_start(), sc.t_end());
      double worst = 0;
      for (int s = 0; s < 1000; ++s) {
        const double t = pick(rng);
        for (int i = 1; i <= sc.size(); ++i) {
          const double a = state.link(i).arrivals.value(view.tau_at(i, t));
          const double d = state.link(i).departures.value(view.sigma_at(i, t));
          worst = std::max(worst, std::abs(a - d) / scale);
        }
      }
      worst_fifo = std::max(worst_fifo, worst);
      fifo_ok += worst <= 1e-9;
    }
  }
  o.pass = cost_ok == states && fifo_ok == states;
  std::ostringstream s;
  s << "cost accountings agree on " << cost_ok << "/" << states << " states (worst rel "
    << worst_cost << "); FIFO identity on " << fifo_ok << "/" << states
    << " states x 1000 times (worst rel " << worst_fifo << ")";
  o.detail = s.str();
  return o;
}

Outcome guarded(const std::function<Outcome()>& body) {
  try {
    return body();
  } catch (const std::exception& e) {
    return {false, std::string("threw: ") + e.what()};
  }
}

}  // namespace

int main() {
  std::vector<std::pair<std::string, Outcome>> results;
  SampledTrees trees;
  bool sampled = true;
  std::string sample_error;
  try {
    trees = sample_random_trees();
  } catch (const std::exception& e) {
    sampled = false;
    sample_error = e.what();
  }
  results.emplace_back("1 queue removal on random trees",
                       sampled ? criterion1(trees) : Outcome{false, sample_error});
  results.emplace_back("2 LP lower bound and round trip",
                       sampled ? criterion2(trees) : Outcome{false, sample_error});
  IntegralRun integral;
  results.emplace_back("3 min-cost flow equals exhaustive search", guarded([&] {
                         integral = integral_instances();
                         return criterion3(integral);
                       }));
  results.emplace_back("4 single bottleneck closed form", guarded(criterion4));
  results.emplace_back("5 optimality conditions", guarded([&] {
                         if (integral.solutions.size() != integral.scenarios.size() ||
                             integral.scenarios.empty()) {
                           return Outcome{false, "criterion 3 instances unavailable"};
                         }
                         return criterion5(integral);
                       }));
  results.emplace_back("6 Lagrangian and Eulerian views agree", guarded(criterion6));

  bool all = true;
  for (const auto& [name, outcome] : results) {
    std::printf("%s criterion %s: %s\n", outcome.pass ? "PASS" : "FAIL", name.c_str(),
                outcome.detail.c_str());
    all = all && outcome.pass;
  }
  return all ? 0 : 1;
}
