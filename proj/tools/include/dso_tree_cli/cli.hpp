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

#ifndef DSO_TREE_CLI_CLI_HPP_
#define DSO_TREE_CLI_CLI_HPP_

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "dso_tree/dso_solver.hpp"
#include "dso_tree/errors.hpp"
#include "dso_tree/scalar.hpp"
#include "dso_tree/scenario.hpp"

namespace dso_tree::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitParse = 2;
inline constexpr int kExitValidation = 3;
inline constexpr int kExitInfeasible = 4;
inline constexpr int kExitCheckFailed = 5;

struct RunConfig {
  // validate, simulate, transform, solve, check-oc, verify or refine.
  std::string command;
  std::filesystem::path scenario;
  std::filesystem::path out = "out";
  std::uint64_t seed = 0;
  int n_samples = 100;
  std::optional<std::string> dt_override;  // parsed in the active number mode
  std::vector<std::string> dt_list;        // refine only
  bool exact = false;
  double tol = 1e-9;  // double mode only; exact mode checks with zero slack
};

struct RunResult {
  int exit_code = kExitOk;
  std::vector<std::filesystem::path> artifacts;
  std::string message;  // one-line outcome
  std::string error;    // structured error JSON when a library error stopped the run
};

// Log level from DSO_TREE_LOG (trace, debug, info, warn, error, off);
// warn when unset. Logs go to stderr.
void configure_logging();

// Throws ValueError unless tol > 0, n_samples >= 0 and the command exists.
void validate_config(const RunConfig& config);

// Runs one command and writes its artifacts under config.out. Library
// errors are caught: the result then carries the class-specific exit code
// and error.json holds {kind, class, message}.
RunResult run(const RunConfig& config);

template <Scalar S>
struct RefineRow {
  S dt;
  S objective;
};

// Solves the scenario once per step in `dt_list`, in the given order.
template <Scalar S>
std::vector<RefineRow<S>> refine_study(const Scenario<S>& scenario, const std::vector<S>& dt_list);

int exit_code_for(ErrorClass c);

}  // namespace dso_tree::cli

#endif  // DSO_TREE_CLI_CLI_HPP_
