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

#ifndef DSO_TREE_VERIFICATION_HPP_
#define DSO_TREE_VERIFICATION_HPP_

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "dso_tree/scalar.hpp"
#include "dso_tree/scenario.hpp"
#include "dso_tree/traffic_state.hpp"

namespace dso_tree {

// Random feasible-state generator. Each origin gets a random entry window
// inside [t_start, t_end - free-flow time], split into `segments` equal
// pieces whose shares of the demand follow a flat Dirichlet draw. Window
// ends and shares are quantised (to 1/time_grid of the horizon and
// 1/weight_grid) so that exact mode works with small rationals.
struct SamplerOptions {
  int segments = 4;
  int max_retries = 200;
  double min_window_fraction = 0.05;  // shortest window, as a horizon fraction
  int time_grid = 1024;
  int weight_grid = 1000;
};

// Draws until the simulated state delivers every commuter by t_end.
// Throws SamplingError after `max_retries` rejected draws.
template <Scalar S>
TrafficState<S> sample_feasible_state(const Scenario<S>& scenario, std::mt19937_64& rng,
                                      const SamplerOptions& options = {});

// Deterministic generator for sample `index` of a run seeded with `seed`.
std::mt19937_64 sample_rng(std::uint64_t seed, std::uint64_t index);

struct SampleRecord {
  int sample_id = 0;
  bool feasible = false;          // (a) transformed state passes every constraint
  double schedule_delta = 0;      // (b) should vanish
  double cost_delta = 0;          // (c) should be <= 0
  double predicted_delta = 0;     // (d) should equal cost_delta
  double max_q_star_violation = 0;
  double max_transformed_wait = 0;
  double original_cost = 0;
  double transformed_cost = 0;
  double original_queueing = 0;
  double lp_gap = 0;              // (e) original cost minus the LP optimum
  std::string error;              // set when the transform itself threw
  bool schedule_ok = false;
  bool improvement_ok = false;
  bool prediction_ok = false;
  bool lp_bound_ok = false;
  bool nonnegative_ok = false;    // q* >= -tol everywhere
  bool passed() const {
    return feasible && schedule_ok && improvement_ok && prediction_ok && lp_bound_ok &&
           nonnegative_ok;
  }
};

struct VerificationOptions {
  double tol = 1e-9;       // relative tolerance for the transform identities
  double lp_tol = 1e-6;    // absolute slack for the LP lower bound
  SamplerOptions sampler;
};

struct VerificationSummary {
  int samples = 0;
  int passed = 0;
  int feasible = 0;
  int schedule_ok = 0;
  int improvement_ok = 0;
  int prediction_ok = 0;
  int lp_bound_ok = 0;
  int nonnegative_ok = 0;
  int queued_samples = 0;  // samples whose original state had a queue
  double worst_schedule_delta = 0;
  double worst_cost_delta = 0;   // largest (least negative) delta
  double worst_prediction_gap = 0;
  double worst_q_star_violation = 0;
  double min_lp_gap = 0;
  double min_total_cost = 0;
};

// LP solution replayed through the simulator: the queue-free state it
// induces should cost exactly the LP objective.
struct LpRoundTrip {
  bool available = false;  // false when the entry profile leaves the horizon
  double objective = 0;
  double simulated_cost = 0;
  double max_queue = 0;
  double gap = 0;
};

struct VerificationReport {
  std::uint64_t seed = 0;
  bool exact = false;
  double lp_objective = 0;
  VerificationOptions options;
  std::vector<SampleRecord> records;
  VerificationSummary summary;
  LpRoundTrip round_trip;
  bool passed() const {
    return summary.passed == summary.samples &&
           (!round_trip.available || round_trip.gap <= options.lp_tol);
  }
};

// Samples feasible states, removes their queues with eliminate_queues and
// checks (a) the transformed state is feasible and queue free, (b) the
// schedule cost is unchanged, (c) total cost does not increase, (d) the
// change equals predicted_cost_delta and (e) the original cost is not below
// the slotted LP optimum minus lp_tol. Samples run sequentially with
// per-sample generators, so the report depends only on (scenario, seed).
template <Scalar S>
VerificationReport verify_nonexistence(const Scenario<S>& scenario, int n_samples,
                                       std::uint64_t seed, const VerificationOptions& options = {});

}  // namespace dso_tree

#endif  // DSO_TREE_VERIFICATION_HPP_
