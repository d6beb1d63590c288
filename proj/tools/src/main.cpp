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

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "dso_tree/io.hpp"
#include "dso_tree_cli/cli.hpp"

namespace {

void add_common(CLI::App* cmd, dso_tree::cli::RunConfig& config) {
  cmd->add_option("--scenario", config.scenario, "Scenario JSON file")->required();
  cmd->add_option("--out", config.out, "Output directory")->capture_default_str();
  cmd->add_option("--tol", config.tol, "Tolerance for floating-point checks")
      ->capture_default_str();
  cmd->add_option("--dt", config.dt_override, "Override the slot length");
  cmd->add_flag("--exact", config.exact, "Use exact rational arithmetic");
}

}  // namespace

int main(int argc, char** argv) {
  dso_tree::cli::configure_logging();
  dso_tree::cli::RunConfig config;

  CLI::App app{"Dynamic system-optimal assignment on tree networks"};
  app.require_subcommand(1);
  const std::pair<const char*, const char*> commands[] = {
      {"validate", "Check a scenario and, if present, its inflows"},
      {"simulate", "Propagate the scenario's inflows and report costs"},
      {"transform", "Remove queues from the scenario's inflows"},
      {"solve", "Solve the slotted system-optimal LP"},
      {"check-oc", "Solve and check the LP optimality conditions"},
      {"verify", "Sample feasible states and check queue removal never hurts"},
      {"refine", "Solve at several slot lengths"},
  };
  for (const auto& [name, help] : commands) {
    CLI::App* cmd = app.add_subcommand(name, help);
    add_common(cmd, config);
    const std::string command = name;
    if (command == "verify") {
      cmd->add_option("--seed", config.seed, "Sampler seed")->capture_default_str();
      cmd->add_option("--n-samples", config.n_samples, "Number of sampled states")
          ->capture_default_str();
    }
    if (command == "refine") {
      cmd->add_option("--dt-list", config.dt_list, "Slot lengths to solve at")->required();
    }
    cmd->callback([&config, command] { config.command = command; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    std::cout << dso_tree::error_json("UsageError", "parse", e.what());
    return dso_tree::cli::kExitParse;
  }

  const dso_tree::cli::RunResult result = dso_tree::cli::run(config);
  if (result.error.empty()) {
    std::cout << result.message << "\n";
  } else {
    std::cout << result.error;
  }
  return result.exit_code;
}
