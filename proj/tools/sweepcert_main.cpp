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

#include <iostream>

#include <CLI11.hpp>

#include "cli/commands.hpp"
#include "sweepcert/errors.hpp"

int main(int argc, char** argv) {
  CLI::App app{
      "sweepcert: simulation and certification for state-dependent iterated "
      "function systems (quantum non-demolition measurements, cell-size "
      "dynamics)"};
  app.require_subcommand(1);

  sweepcert::cli::CommandOptions opts;
  auto add_common = [&opts](CLI::App* sub) {
    sub->add_option("--config", opts.config_path,
                    "Experiment configuration file (JSON)")
        ->required();
    sub->add_option(
        "--output-dir", opts.output_dir_override,
        "Report directory (overrides SWEEPCERT_OUTPUT_DIR and the config)");
    sub->add_flag("--quiet", opts.quiet, "Suppress progress and summary output");
  };

  CLI::App* validate = app.add_subcommand(
      "validate",
      "Run the self-consistency battery for the configured model");
  CLI::App* certify = app.add_subcommand(
      "certify",
      "Check proper subinvariance and local integrability of the model's "
      "Lyapunov density");
  CLI::App* simulate = app.add_subcommand(
      "simulate",
      "Run a trajectory ensemble and report set-mass decay per family member");
  add_common(validate);
  add_common(certify);
  add_common(simulate);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;  // usage problems share the config exit code
  }

  try {
    if (validate->parsed()) return sweepcert::cli::cmd_validate(opts);
    if (certify->parsed()) return sweepcert::cli::cmd_certify(opts);
    return sweepcert::cli::cmd_simulate(opts);
  } catch (const sweepcert::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
