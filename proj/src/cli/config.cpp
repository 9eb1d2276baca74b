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

#include "cli/config.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>

#include "sweepcert/errors.hpp"

namespace sweepcert::cli {

namespace {

using nlohmann::json;

void reject_unknown_keys(const json& j, const std::string& where,
                         const std::set<std::string>& allowed) {
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (allowed.find(it.key()) == allowed.end()) {
      throw ConfigError("unknown key \"" + it.key() + "\" in " + where);
    }
  }
}

const json& require_key(const json& j, const std::string& where,
                        const std::string& key) {
  auto it = j.find(key);
  if (it == j.end()) {
    throw ConfigError("missing required key \"" + key + "\" in " + where);
  }
  return *it;
}

double number_in(const json& j, const std::string& what) {
  if (!j.is_number()) throw ConfigError(what + " must be a number");
  const double v = j.get<double>();
  if (!std::isfinite(v)) throw ConfigError(what + " must be finite");
  return v;
}

long long integer_in(const json& j, const std::string& what) {
  if (!j.is_number_integer()) throw ConfigError(what + " must be an integer");
  return j.get<long long>();
}

QndModelConfig parse_qnd(const json& j) {
  QndModelConfig cfg;
  const bool has_diag = j.contains("diagonal");
  const bool has_mats = j.contains("matrices");
  if (has_diag == has_mats) {
    throw ConfigError(
        "qnd model needs exactly one of \"diagonal\" or \"matrices\"");
  }
  if (has_diag) {
    cfg.is_diagonal = true;
    const json& table = j.at("diagonal");
    if (!table.is_array() || table.empty()) {
      throw ConfigError("model.diagonal must be a non-empty array of rows");
    }
    for (const json& row : table) {
      if (!row.is_array() || row.empty()) {
        throw ConfigError("model.diagonal rows must be non-empty arrays");
      }
      std::vector<double> entries;
      for (const json& e : row) entries.push_back(number_in(e, "model.diagonal entry"));
      if (!cfg.diagonal.empty() && entries.size() != cfg.diagonal[0].size()) {
        throw ConfigError("model.diagonal rows must all have the same length");
      }
      cfg.diagonal.push_back(std::move(entries));
    }
    return cfg;
  }
  cfg.is_diagonal = false;
  const json& mats = j.at("matrices");
  if (!mats.is_array() || mats.empty()) {
    throw ConfigError("model.matrices must be a non-empty array");
  }
  int n = -1;
  for (const json& mat : mats) {
    if (!mat.is_array() || mat.empty()) {
      throw ConfigError("each matrix must be a non-empty array of rows");
    }
    const int rows = static_cast<int>(mat.size());
    if (n < 0) n = rows;
    if (rows != n) throw ConfigError("all matrices must have the same size");
    Eigen::MatrixXcd m(n, n);
    for (int r = 0; r < n; ++r) {
      const json& row = mat.at(static_cast<std::size_t>(r));
      if (!row.is_array() || static_cast<int>(row.size()) != n) {
        throw ConfigError("matrix rows must have length equal to the matrix size");
      }
      for (int c = 0; c < n; ++c) {
        const json& entry = row.at(static_cast<std::size_t>(c));
        if (!entry.is_array() || entry.size() != 2) {
          throw ConfigError("complex entries must be [re, im] pairs");
        }
        m(r, c) = std::complex<double>(number_in(entry.at(0), "matrix entry re"),
                                       number_in(entry.at(1), "matrix entry im"));
      }
    }
    cfg.matrices.push_back(std::move(m));
  }
  return cfg;
}

CellModelConfig parse_cell(const json& j) {
  CellModelConfig cfg;
  cfg.alpha = number_in(require_key(j, "model", "alpha"), "model.alpha");
  cfg.sigma = number_in(require_key(j, "model", "sigma"), "model.sigma");
  const json& beta = require_key(j, "model", "beta");
  if (beta.is_string()) {
    if (beta.get<std::string>() != "auto") {
      throw ConfigError("model.beta must be a positive number or \"auto\"");
    }
  } else {
    const double b = number_in(beta, "model.beta");
    if (!(b > 0.0)) {
      throw ConfigError("model.beta must be positive (use \"auto\" to search)");
    }
    cfg.beta = b;
  }
  if (!(cfg.alpha > 0.0)) throw ConfigError("model.alpha must be positive");
  if (!(cfg.sigma > 0.0 && cfg.sigma < 1.0)) {
    throw ConfigError("model.sigma must lie in (0, 1)");
  }
  return cfg;
}

ModelConfig parse_model(const json& j) {
  if (!j.is_object()) throw ConfigError("\"model\" must be an object");
  ModelConfig model;
  const json& kind = require_key(j, "model", "kind");
  if (!kind.is_string()) throw ConfigError("model.kind must be a string");
  const std::string kind_str = kind.get<std::string>();
  if (kind_str == "qnd") {
    model.kind = ModelConfig::Kind::qnd;
    reject_unknown_keys(j, "model", {"kind", "diagonal", "matrices"});
    model.qnd = parse_qnd(j);
  } else if (kind_str == "cell") {
    model.kind = ModelConfig::Kind::cell;
    reject_unknown_keys(j, "model", {"kind", "alpha", "sigma", "beta"});
    model.cell = parse_cell(j);
  } else {
    throw ConfigError("model.kind must be \"qnd\" or \"cell\"");
  }
  return model;
}

certify::FamilySpec parse_family(const json& j, ModelConfig::Kind model_kind) {
  if (!j.is_object()) throw ConfigError("\"family\" must be an object");
  reject_unknown_keys(j, "family", {"kind", "params"});
  const json& kind = require_key(j, "family", "kind");
  if (!kind.is_string()) throw ConfigError("family.kind must be a string");
  const std::string kind_str = kind.get<std::string>();
  certify::FamilySpec family;
  if (kind_str == "sphere-min-coordinate") {
    family.kind = certify::FamilySpec::Kind::sphere_min_coordinate;
    if (model_kind != ModelConfig::Kind::qnd) {
      throw ConfigError("family kind sphere-min-coordinate requires a qnd model");
    }
  } else if (kind_str == "half-line-interval") {
    family.kind = certify::FamilySpec::Kind::half_line_interval;
    if (model_kind != ModelConfig::Kind::cell) {
      throw ConfigError("family kind half-line-interval requires a cell model");
    }
  } else {
    throw ConfigError(
        "family.kind must be \"sphere-min-coordinate\" or \"half-line-interval\"");
  }
  const json& params = require_key(j, "family", "params");
  if (!params.is_array() || params.empty()) {
    throw ConfigError("family.params must be a non-empty array");
  }
  for (const json& p : params) {
    const double v = number_in(p, "family param");
    if (family.kind == certify::FamilySpec::Kind::sphere_min_coordinate &&
        !(v > 0.0 && v < 1.0)) {
      throw ConfigError("sphere family params must lie in (0, 1)");
    }
    if (family.kind == certify::FamilySpec::Kind::half_line_interval && !(v > 0.0)) {
      throw ConfigError("half-line family params must be positive");
    }
    family.params.push_back(v);
  }
  return family;
}

CertificateConfig parse_certificate(const json& j) {
  if (!j.is_object()) throw ConfigError("\"certificate\" must be an object");
  reject_unknown_keys(j, "certificate",
                      {"n_points", "exclusion_radius", "margin_floor", "x_max",
                       "beta_max", "beta_grid", "integrability_samples"});
  CertificateConfig cfg;
  if (j.contains("n_points")) {
    cfg.n_points = integer_in(j.at("n_points"), "certificate.n_points");
    if (cfg.n_points < 1) throw ConfigError("certificate.n_points must be >= 1");
  }
  if (j.contains("exclusion_radius")) {
    cfg.exclusion_radius =
        number_in(j.at("exclusion_radius"), "certificate.exclusion_radius");
    if (!(cfg.exclusion_radius >= 0.0)) {
      throw ConfigError("certificate.exclusion_radius must be >= 0");
    }
  }
  if (j.contains("margin_floor")) {
    cfg.margin_floor = number_in(j.at("margin_floor"), "certificate.margin_floor");
    if (!(cfg.margin_floor >= 0.0)) {
      throw ConfigError("certificate.margin_floor must be >= 0");
    }
  }
  if (j.contains("x_max")) {
    cfg.x_max = number_in(j.at("x_max"), "certificate.x_max");
    if (!(cfg.x_max > 0.0)) throw ConfigError("certificate.x_max must be positive");
  }
  if (j.contains("beta_max")) {
    cfg.beta_max = number_in(j.at("beta_max"), "certificate.beta_max");
    if (!(cfg.beta_max > 0.0)) throw ConfigError("certificate.beta_max must be positive");
  }
  if (j.contains("beta_grid")) {
    const long long g = integer_in(j.at("beta_grid"), "certificate.beta_grid");
    if (g < 1 || g > 1000000) throw ConfigError("certificate.beta_grid out of range");
    cfg.beta_grid = static_cast<int>(g);
  }
  if (j.contains("integrability_samples")) {
    cfg.integrability_samples =
        integer_in(j.at("integrability_samples"), "certificate.integrability_samples");
    if (cfg.integrability_samples < 2) {
      throw ConfigError("certificate.integrability_samples must be >= 2");
    }
  }
  return cfg;
}

OutputConfig parse_output(const json& j) {
  if (!j.is_object()) throw ConfigError("\"output\" must be an object");
  reject_unknown_keys(j, "output", {"directory", "formats"});
  OutputConfig cfg;
  if (j.contains("directory")) {
    if (!j.at("directory").is_string()) {
      throw ConfigError("output.directory must be a string");
    }
    cfg.directory = j.at("directory").get<std::string>();
    if (cfg.directory.empty()) throw ConfigError("output.directory must be non-empty");
  }
  if (j.contains("formats")) {
    const json& formats = j.at("formats");
    if (!formats.is_array() || formats.empty()) {
      throw ConfigError("output.formats must be a non-empty array");
    }
    cfg.formats.clear();
    for (const json& f : formats) {
      if (!f.is_string()) throw ConfigError("output.formats entries must be strings");
      const std::string fmt = f.get<std::string>();
      if (fmt != "json" && fmt != "csv") {
        throw ConfigError("output.formats entries must be \"json\" or \"csv\"");
      }
      cfg.formats.push_back(fmt);
    }
  }
  return cfg;
}

}  // namespace

const std::vector<Eigen::MatrixXcd>& QndModelConfig::as_matrices() const {
  if (!is_diagonal) return matrices;
  if (cache_.empty()) {
    for (const std::vector<double>& row : diagonal) {
      Eigen::MatrixXcd m =
          Eigen::MatrixXcd::Zero(static_cast<int>(row.size()),
                                 static_cast<int>(row.size()));
      for (std::size_t i = 0; i < row.size(); ++i) {
        m(static_cast<int>(i), static_cast<int>(i)) = row[i];
      }
      cache_.push_back(std::move(m));
    }
  }
  return cache_;
}

bool OutputConfig::wants(const std::string& fmt) const {
  return std::find(formats.begin(), formats.end(), fmt) != formats.end();
}

ExperimentConfig parse_config_json(const nlohmann::json& j) {
  if (!j.is_object()) throw ConfigError("config root must be an object");
  reject_unknown_keys(j, "config",
                      {"model", "seed", "n_trajectories", "horizon",
                       "checkpoints", "workers", "family", "certificate",
                       "output"});
  ExperimentConfig cfg;
  cfg.model = parse_model(require_key(j, "config", "model"));

  const json& seed = require_key(j, "config", "seed");
  if (!(seed.is_number_integer() &&
        (seed.is_number_unsigned() || seed.get<long long>() >= 0))) {
    throw ConfigError("seed must be a non-negative integer");
  }
  cfg.seed = seed.get<std::uint64_t>();

  if (j.contains("n_trajectories")) {
    cfg.n_trajectories = integer_in(j.at("n_trajectories"), "n_trajectories");
    if (cfg.n_trajectories < 1) throw ConfigError("n_trajectories must be >= 1");
  }
  if (j.contains("horizon")) {
    cfg.horizon = integer_in(j.at("horizon"), "horizon");
    if (cfg.horizon < 0) throw ConfigError("horizon must be >= 0");
  }
  if (j.contains("checkpoints")) {
    const json& cps = j.at("checkpoints");
    if (!cps.is_array() || cps.empty()) {
      throw ConfigError("checkpoints must be a non-empty array");
    }
    for (const json& c : cps) {
      cfg.checkpoints.push_back(integer_in(c, "checkpoint"));
    }
    if (cfg.checkpoints.front() != 0) {
      throw ConfigError("checkpoints must start at 0");
    }
    for (std::size_t i = 1; i < cfg.checkpoints.size(); ++i) {
      if (cfg.checkpoints[i] <= cfg.checkpoints[i - 1]) {
        throw ConfigError("checkpoints must be strictly ascending");
      }
    }
  } else {
    cfg.checkpoints = {0};
    for (const long long c :
         {cfg.horizon / 4, cfg.horizon / 2, cfg.horizon}) {
      if (c > cfg.checkpoints.back()) cfg.checkpoints.push_back(c);
    }
  }
  if (j.contains("workers")) {
    const long long w = integer_in(j.at("workers"), "workers");
    if (w < 1 || w > 4096) throw ConfigError("workers out of range");
    cfg.workers = static_cast<int>(w);
  }
  if (j.contains("family")) {
    cfg.family = parse_family(j.at("family"), cfg.model.kind);
  } else {
    cfg.family = cfg.model.kind == ModelConfig::Kind::qnd
                     ? certify::FamilySpec::sphere_default()
                     : certify::FamilySpec::half_line_default();
  }
  if (j.contains("certificate")) {
    cfg.certificate = parse_certificate(j.at("certificate"));
  }
  if (j.contains("output")) cfg.output = parse_output(j.at("output"));
  return cfg;
}

ExperimentConfig parse_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file: " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("config is not valid JSON: ") + e.what());
  }
  return parse_config_json(j);
}

nlohmann::json model_to_json(const ModelConfig& model) {
  nlohmann::json j;
  if (model.kind == ModelConfig::Kind::qnd) {
    j["kind"] = "qnd";
    if (model.qnd.is_diagonal) {
      j["diagonal"] = model.qnd.diagonal;
    } else {
      nlohmann::json mats = nlohmann::json::array();
      for (const Eigen::MatrixXcd& m : model.qnd.matrices) {
        nlohmann::json mat = nlohmann::json::array();
        for (int r = 0; r < m.rows(); ++r) {
          nlohmann::json row = nlohmann::json::array();
          for (int c = 0; c < m.cols(); ++c) {
            row.push_back({m(r, c).real(), m(r, c).imag()});
          }
          mat.push_back(row);
        }
        mats.push_back(mat);
      }
      j["matrices"] = mats;
    }
  } else {
    j["kind"] = "cell";
    j["alpha"] = model.cell.alpha;
    j["sigma"] = model.cell.sigma;
    if (model.cell.beta.has_value()) {
      j["beta"] = *model.cell.beta;
    } else {
      j["beta"] = "auto";
    }
  }
  return j;
}

}  // namespace sweepcert::cli
