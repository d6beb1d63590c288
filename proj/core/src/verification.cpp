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

#include "dso_tree/verification.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "dso_tree/cost.hpp"
#include "dso_tree/dso_solver.hpp"
#include "dso_tree/errors.hpp"
#include "dso_tree/feasibility.hpp"
#include "dso_tree/queue_eliminator.hpp"

namespace dso_tree {
namespace {

template <Scalar S>
StepFunction<S> draw_profile(const Scenario<S>& scenario, int origin, std::mt19937_64& rng,
                             const SamplerOptions& options) {
  const S& demand = scenario.demand(origin);
  if (demand == S(0)) return {};
  const S unit = scenario.horizon_length() / S(options.time_grid);
  const S latest = scenario.t_end() - scenario.network().path_free_flow(origin);
  const double room = std::floor(to_double(S((latest - scenario.t_start()) / unit)));
  const long long ticks = static_cast<long long>(room);
  if (ticks < 1) {
    throw SamplingError("origin " + std::to_string(origin) +
                        " cannot reach the destination inside the horizon");
  }
  const long long shortest = std::clamp<long long>(
      static_cast<long long>(std::ceil(options.min_window_fraction * options.time_grid)), 1,
      ticks);
  const long long length = std::uniform_int_distribution<long long>(shortest, ticks)(rng);
  const long long offset = std::uniform_int_distribution<long long>(0, ticks - length)(rng);

  std::gamma_distribution<double> gamma(1.0, 1.0);
  std::vector<double> draws(options.segments);
  double sum = 0;
  for (double& g : draws) sum += (g = gamma(rng));
  std::vector<long long> weights(options.segments);
  long long total = 0;
  for (int k = 0; k < options.segments; ++k) {
    weights[k] = 1 + static_cast<long long>(std::floor(draws[k] / sum * options.weight_grid));
    total += weights[k];
  }

  const S begin = scenario.t_start() + unit * S(offset);
  const S piece = unit * S(length) / S(options.segments);
  std::vector<S> breakpoints;
  std::vector<S> rates;
  for (int k = 0; k < options.segments; ++k) {
    breakpoints.push_back(begin + piece * S(k));
    rates.push_back(demand * S(weights[k]) / (S(total) * piece));
  }
  breakpoints.push_back(begin + unit * S(length));
  return StepFunction<S>(std::move(breakpoints), std::move(rates));
}

}  // namespace

std::mt19937_64 sample_rng(std::uint64_t seed, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  return std::mt19937_64(seq);
}

template <Scalar S>
TrafficState<S> sample_feasible_state(const Scenario<S>& scenario, std::mt19937_64& rng,
                                      const SamplerOptions& options) {
  if (options.segments < 1 || options.time_grid < 1 || options.weight_grid < 1) {
    throw ValueError("sampler grid sizes must be positive");
  }
  for (int attempt = 0; attempt < options.max_retries; ++attempt) {
    InflowProfiles<S> inflows(scenario.size() + 1);
    for (int i = 1; i <= scenario.size(); ++i) inflows[i] = draw_profile(scenario, i, rng, options);
    TrafficState<S> state = simulate(scenario, inflows);
    if (state.last_destination_arrival() <= scenario.t_end()) return state;
  }
  throw SamplingError("no feasible state after " + std::to_string(options.max_retries) +
                      " draws; the horizon is too tight for random profiles");
}

template <Scalar S>
VerificationReport verify_nonexistence(const Scenario<S>& scenario, int n_samples,
                                       std::uint64_t seed, const VerificationOptions& options) {
  if (n_samples < 0) throw ValueError("n_samples must be nonnegative");
  if (!(options.tol > 0)) throw ValueError("tolerance must be positive");

  VerificationReport report;
  report.seed = seed;
  report.exact = kIsExact<S>;
  report.options = options;
  if (n_samples == 0) return report;

  // Exact mode checks every identity with zero slack.
  S tol(0);
  if constexpr (!kIsExact<S>) tol = options.tol;

  const LpSolution<S> lp = solve(scenario);
  report.lp_objective = to_double(lp.objective);
  report.round_trip.objective = report.lp_objective;
  try {
    const TrafficState<S> replay = simulate(scenario, inflows_from_solution(lp));
    report.round_trip.available = true;
    report.round_trip.simulated_cost = to_double(total_cost(replay).total);
    report.round_trip.max_queue = to_double(replay.max_queue());
    report.round_trip.gap = std::abs(report.round_trip.simulated_cost - report.lp_objective);
  } catch (const HorizonError&) {
    report.round_trip.available = false;
  }

  auto& sum = report.summary;
  sum.min_lp_gap = INFINITY;
  sum.min_total_cost = INFINITY;
  sum.worst_cost_delta = -INFINITY;
  for (int id = 0; id < n_samples; ++id) {
    std::mt19937_64 rng = sample_rng(seed, static_cast<std::uint64_t>(id));
    const TrafficState<S> state = sample_feasible_state(scenario, rng, options.sampler);

    SampleRecord rec;
    rec.sample_id = id;
    try {
      const TransformResult<S> t = eliminate_queues(state, tol);
      const double scale = std::max(1.0, std::abs(to_double(t.original_cost.total)));
      const double slack = options.tol * scale;
      rec.original_cost = to_double(t.original_cost.total);
      rec.transformed_cost = to_double(t.transformed_cost.total);
      rec.original_queueing = to_double(t.original_cost.queueing);
      rec.schedule_delta = to_double(t.schedule_delta);
      rec.cost_delta = to_double(t.cost_delta);
      rec.predicted_delta = to_double(t.predicted_delta);
      rec.max_q_star_violation = to_double(t.max_inflow_violation);
      rec.max_transformed_wait = to_double(t.max_transformed_wait);
      rec.lp_gap = rec.original_cost - report.lp_objective;

      const bool queue_free = kIsExact<S> ? (t.max_transformed_wait == S(0) &&
                                             t.max_transformed_queue == S(0))
                                          : (rec.max_transformed_wait <= slack &&
                                             to_double(t.max_transformed_queue) <= slack);
      rec.feasible = queue_free && check_feasibility(t.transformed_view, tol).feasible();
      const double schedule_scale =
          std::max(1.0, std::abs(to_double(t.original_cost.schedule)));
      if constexpr (kIsExact<S>) {
        rec.schedule_ok = t.schedule_delta == S(0);
        rec.improvement_ok = t.cost_delta <= S(0);
        rec.prediction_ok = t.cost_delta == t.predicted_delta;
        rec.nonnegative_ok = t.max_inflow_violation == S(0);
      } else {
        rec.schedule_ok = std::abs(rec.schedule_delta) <= options.tol * schedule_scale;
        rec.improvement_ok = rec.cost_delta <= slack;
        rec.prediction_ok = std::abs(rec.cost_delta - rec.predicted_delta) <= slack;
        rec.nonnegative_ok = rec.max_q_star_violation <= slack;
      }
      rec.lp_bound_ok = rec.lp_gap >= -options.lp_tol;
      if (rec.original_queueing > slack) ++sum.queued_samples;
    } catch (const Error& e) {
      rec.error = e.kind() + ": " + e.what();
    }

    ++sum.samples;
    sum.passed += rec.passed();
    sum.feasible += rec.feasible;
    sum.schedule_ok += rec.schedule_ok;
    sum.improvement_ok += rec.improvement_ok;
    sum.prediction_ok += rec.prediction_ok;
    sum.lp_bound_ok += rec.lp_bound_ok;
    sum.nonnegative_ok += rec.nonnegative_ok;
    sum.worst_schedule_delta = std::max(sum.worst_schedule_delta, std::abs(rec.schedule_delta));
    sum.worst_cost_delta = std::max(sum.worst_cost_delta, rec.cost_delta);
    sum.worst_prediction_gap =
        std::max(sum.worst_prediction_gap, std::abs(rec.cost_delta - rec.predicted_delta));
    sum.worst_q_star_violation = std::max(sum.worst_q_star_violation, rec.max_q_star_violation);
    if (rec.error.empty()) {
      sum.min_lp_gap = std::min(sum.min_lp_gap, rec.lp_gap);
      sum.min_total_cost = std::min(sum.min_total_cost, rec.original_cost);
    }
    report.records.push_back(std::move(rec));
  }
  if (std::isinf(sum.min_lp_gap)) sum.min_lp_gap = 0;
  if (std::isinf(sum.min_total_cost)) sum.min_total_cost = 0;
  return report;
}

template TrafficState<double> sample_feasible_state<double>(const Scenario<double>&,
                                                            std::mt19937_64&,
                                                            const SamplerOptions&);
template TrafficState<Rational> sample_feasible_state<Rational>(const Scenario<Rational>&,
                                                                std::mt19937_64&,
                                                                const SamplerOptions&);
template VerificationReport verify_nonexistence<double>(const Scenario<double>&, int,
                                                        std::uint64_t,
                                                        const VerificationOptions&);
template VerificationReport verify_nonexistence<Rational>(const Scenario<Rational>&, int,
                                                          std::uint64_t,
                                                          const VerificationOptions&);

}  // namespace dso_tree
