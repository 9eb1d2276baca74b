// Copyright 2026 The sweepcert Authors
//
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

#ifndef SWEEPCERT_CLI_COMMANDS_HPP
#define SWEEPCERT_CLI_COMMANDS_HPP

#include <string>

namespace sweepcert::cli {

struct CommandOptions {
  std::string config_path;
  // Highest-precedence output directory; empty means "not given", in which
  // case the SWEEPCERT_OUTPUT_DIR environment variable and then the config's
  // output.directory apply.
  std::string output_dir_override;
  bool quiet = false;
};

// Self-consistency battery for the configured model: ensemble health, the
// closed-form transfer operator against the generic engine, analytic Jacobians
// against finite differences, kernel normalization, and the duality identity.
// Prints a table; exit 0 when every hard check passes, 1 otherwise.
int cmd_validate(const CommandOptions& opts);

// Certificate run: samples the subinvariance margin of the model's Lyapunov
// density and checks its local integrability on the configured family.
// Writes certificate.json (and margins.csv when the config asks for csv).
// Exit 0 certified, 1 violated, 3 inconclusive.
int cmd_certify(const CommandOptions& opts);

// Trajectory-ensemble run measuring set mass per family member and
// checkpoint.  Writes sweeping.csv and sweeping.json.  Exit 0 on completion;
// the trend verdicts are data, not a pass/fail signal.
int cmd_simulate(const CommandOptions& opts);

}  // namespace sweepcert::cli

#endif  // SWEEPCERT_CLI_COMMANDS_HPP
