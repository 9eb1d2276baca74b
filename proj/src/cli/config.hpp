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

#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "sweepcert/certify.hpp"

namespace sweepcert::cli {

struct QndModelConfig {
  bool is_diagonal = true;
  // Diagonal kind: K rows of N entries.
  std::vector<std::vector<double>> diagonal;
  // General kind: K complex N x N matrices.
  std::vector<Eigen::MatrixXcd> matrices;

  const std::vector<Eigen::MatrixXcd>& as_matrices() const;

 private:
  mutable std::vector<Eigen::MatrixXcd> cache_;
};

struct CellModelConfig {
  double alpha = 1.0;
  double sigma = 0.5;
  std::optional<double> beta;  // empty means "auto"
};

struct ModelConfig {
  enum class Kind { qnd, cell };
  Kind kind = Kind::qnd;
  QndModelConfig qnd;
  CellModelConfig cell;
};

struct CertificateConfig {
  long long n_points = 10000;
  double exclusion_radius = 1e-3;
  double margin_floor = 1e-9;
  double x_max = 1000.0;           // half-line sampling window upper end
  double beta_max = 1.0;           // beta search range
  int beta_grid = 100;
  long long integrability_samples = 100000;
};

struct OutputConfig {
  std::string directory = ".";
  std::vector<std::string> formats = {"json", "csv"};

  bool wants(const std::string& fmt) const;
};

struct ExperimentConfig {
  ModelConfig model;
  std::uint64_t seed = 0;
  long long n_trajectories = 10000;
  long long horizon = 100;
  std::vector<long long> checkpoints;  // always starts at 0
  int workers = 1;
  certify::FamilySpec family;
  CertificateConfig certificate;
  OutputConfig output;
};

// Parses and schema-validates; throws ConfigError with a pointed message on
// unknown keys, missing sections, type mismatches, or out-of-range values.
ExperimentConfig parse_config_json(const nlohmann::json& j);
ExperimentConfig parse_config_file(const std::string& path);

// Deterministic echo of the parsed model for report files.
nlohmann::json model_to_json(const ModelConfig& model);

}  // namespace sweepcert::cli
