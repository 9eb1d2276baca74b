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

#include "cli/commands.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "cli/config.hpp"
#include "cli/report_io.hpp"
#include "sweepcert/cell_cycle.hpp"
#include "sweepcert/certify.hpp"
#include "sweepcert/errors.hpp"
#include "sweepcert/fd_jacobian.hpp"
#include "sweepcert/markov.hpp"
#include "sweepcert/qnd.hpp"
#include "sweepcert/quadrature.hpp"
#include "sweepcert/sphere_sampling.hpp"

namespace sweepcert::cli {

namespace {

namespace fs = std::filesystem;

fs::path resolve_output_dir(const CommandOptions& opts,
                            const ExperimentConfig& cfg) {
  if (!opts.output_dir_override.empty()) return opts.output_dir_override;
  if (const char* env = std::getenv("SWEEPCERT_OUTPUT_DIR");
      env != nullptr && *env != '\0') {
    return env;
  }
  return cfg.output.directory;
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.4g", v);
  return buf;
}

std::string family_kind_string(certify::FamilySpec::Kind kind) {
  return kind == certify::FamilySpec::Kind::sphere_min_coordinate
             ? "sphere-min-coordinate"
             : "half-line-interval";
}

nlohmann::json family_to_json(const certify::FamilySpec& family) {
  return {{"kind", family_kind_string(family.kind)},
          {"params", family.params}};
}

qnd::MeasurementEnsemble build_ensemble(const QndModelConfig& cfg) {
  if (cfg.is_diagonal) return qnd::MeasurementEnsemble::diagonal(cfg.diagonal);
  return qnd::MeasurementEnsemble::general(cfg.matrices);
}

// ---------------------------------------------------------------------------
// validate

class CheckTable {
 public:
  explicit CheckTable(bool quiet) : quiet_(quiet) {}

  void check(const std::string& name, bool pass, const std::string& detail) {
    all_pass_ = all_pass_ && pass;
    print(pass ? "[PASS]" : "[FAIL]", name, detail);
  }

  void info(const std::string& name, const std::string& detail) {
    print("[info]", name, detail);
  }

  bool all_pass() const { return all_pass_; }

 private:
  void print(const std::string& tag, const std::string& name,
             const std::string& detail) const {
    if (quiet_) return;
    std::ostringstream line;
    line << "  " << tag << " " << name;
    if (!detail.empty()) {
      for (std::size_t i = name.size(); i < 52; ++i) line << ' ';
      line << "  " << detail;
    }
    std::cout << line.str() << "\n";
  }

  bool quiet_;
  bool all_pass_ = true;
};

int validate_qnd(const ExperimentConfig& cfg, const CommandOptions& opts) {
  CheckTable table(opts.quiet);
  const std::vector<Eigen::MatrixXcd>& matrices = cfg.model.qnd.as_matrices();
  const qnd::EnsembleValidation health =
      qnd::MeasurementEnsemble::inspect(matrices, cfg.model.qnd.is_diagonal);

  if (!opts.quiet) {
    std::cout << "model: qnd ensemble, " << matrices.size()
              << " branches, complex dimension " << matrices[0].rows() << " ("
              << (cfg.model.qnd.is_diagonal ? "diagonal" : "general") << ")\n";
  }

  table.check("completeness residual", health.completeness_ok,
              fmt(health.completeness_residual) + " (tolerance 1e-12)");
  table.check("branch invertibility, min |det M_k|", health.invertibility_ok,
              fmt(health.min_abs_det) + " (threshold 1e-12)");
  if (cfg.model.qnd.is_diagonal) {
    table.check("diagonal entries inside (0, 1)", health.diagonal_entries_ok, "");
    table.check("diagonal rows pairwise distinct", health.diagonal_distinct_ok, "");
  }
  table.info("all branches hermitian", health.all_hermitian ? "yes" : "no");
  table.info("all branches positive definite",
             health.all_positive_definite ? "yes" : "no");

  if (!health.ok()) {
    if (!opts.quiet) std::cout << "validation: FAIL\n";
    return 1;
  }

  // The numeric cross-checks need a constructed (healthy) ensemble.
  const qnd::MeasurementEnsemble ensemble = build_ensemble(cfg.model.qnd);
  const int dim = ensemble.dim();
  const IfsModel<QuantumState> model = qnd::to_ifs_model(ensemble);
  RandomStream rng(cfg.seed);

  // Sample points away from the coordinate-zero set so the Fock density stays
  // finite during the operator comparison.
  RandomStream point_rng = rng.substream(0);
  std::vector<QuantumState> points;
  while (points.size() < 5) {
    QuantumState phi = sample_uniform_sphere(dim, point_rng);
    if (phi.min_abs_component() >= 0.05) points.push_back(phi);
  }

  const qnd::FockLyapunovDensity fock(dim);
  const std::function<double(const QuantumState&)> densities[2] = {
      [&fock](const QuantumState& p) { return fock(p); },
      [](const QuantumState& p) { return 1.0 + std::norm(p[0]); }};

  double max_op_diff = 0.0;
  double max_weight_residual = 0.0;
  for (const QuantumState& phi : points) {
    for (const auto& rho : densities) {
      const double closed = qnd::perron_qnd(ensemble, rho, phi);
      const double generic = perron_pointwise(model, rho, phi);
      max_op_diff = std::max(
          max_op_diff, std::abs(closed - generic) / std::max(1.0, std::abs(closed)));
    }
    max_weight_residual =
        std::max(max_weight_residual,
                 std::abs(qnd::outcome_probabilities(ensemble, phi).sum() - 1.0));
  }
  table.check("outcome probabilities sum to 1", max_weight_residual <= 1e-12,
              "max residual " + fmt(max_weight_residual) + " (tolerance 1e-12)");
  table.check("transfer operator, closed form vs generic engine",
              max_op_diff <= 1e-10,
              "max relative difference " + fmt(max_op_diff) + " (tolerance 1e-10)");

  double max_jac_consistency = 0.0;
  double max_jac_fd = 0.0;
  for (int k = 0; k < ensemble.branch_count(); ++k) {
    const Eigen::MatrixXcd& m = ensemble.matrix(k);
    const Eigen::MatrixXd mr = qnd::realify(m);
    for (int s = 0; s < 3; ++s) {
      const QuantumState& phi = points[static_cast<std::size_t>(s)];
      const double analytic = qnd::jacobian_det_complex(m, phi);
      const double via_real = qnd::jacobian_det_real(mr, phi.realified());
      max_jac_consistency =
          std::max(max_jac_consistency,
                   std::abs(analytic - via_real) / std::max(1.0, analytic));
      const FdJacobianResult fd = fd_jacobian_det_on_sphere(
          [&mr](const Eigen::VectorXd& x) -> Eigen::VectorXd {
            const Eigen::VectorXd y = mr * x;
            return y / y.norm();
          },
          phi.realified());
      max_jac_fd = std::max(max_jac_fd,
                            std::abs(analytic - fd.value) / std::max(1.0, analytic));
    }
  }
  table.check("jacobian, complex vs realified closed form",
              max_jac_consistency <= 1e-12,
              "max relative difference " + fmt(max_jac_consistency) +
                  " (tolerance 1e-12)");
  table.check("jacobian, closed form vs finite differences", max_jac_fd <= 1e-5,
              "max relative difference " + fmt(max_jac_fd) + " (tolerance 1e-5)");

  // Duality against the uniform probability density on the sphere.
  const double vol = sphere_volume(dim);
  const double eps = 0.3 / std::sqrt(static_cast<double>(dim));
  const MonteCarloEstimate res = duality_residual(
      model, [vol](const QuantumState&) { return 1.0 / vol; },
      [dim](RandomStream& r) { return sample_uniform_sphere(dim, r); },
      [eps](const QuantumState& p) { return p.min_abs_component() >= eps; },
      200000, rng.substream(1));
  const bool duality_ok = std::abs(res.value) <= 3.0 * res.std_error + 1e-12;
  table.check("duality residual (uniform density)", duality_ok,
              "|" + fmt(res.value) + "| vs 3 x std error " +
                  fmt(3.0 * res.std_error));

  if (!opts.quiet) {
    std::cout << "validation: " << (table.all_pass() ? "PASS" : "FAIL") << "\n";
  }
  return table.all_pass() ? 0 : 1;
}

int validate_cell(const ExperimentConfig& cfg, const CommandOptions& opts) {
  CheckTable table(opts.quiet);
  const CellModelConfig& mc = cfg.model.cell;
  const cell::CellCycleModel model(mc.alpha, mc.sigma, 0.0);
  const double alpha = model.alpha();
  const double sigma = model.sigma();

  if (!opts.quiet) {
    std::cout << "model: cell-size process, alpha " << format_double(alpha)
              << ", sigma " << format_double(sigma) << "\n";
  }
  table.info("alpha * ln(sigma)",
             fmt(alpha * std::log(sigma)) +
                 (model.sweeping_regime() ? " (>= -1: sweeping regime)"
                                          : " (< -1: outside sweeping regime)"));

  double max_norm_residual = 0.0;
  for (const double y : {sigma, 0.5 * (sigma + 1.0), 1.0, 2.0, 5.0}) {
    const double mass = integrate_1d(
        [&](double x) { return cell::kernel_eval(model, x, y); },
        sigma * std::max(1.0, y), std::numeric_limits<double>::infinity(), 1e-11);
    max_norm_residual = std::max(max_norm_residual, std::abs(mass - 1.0));
  }
  table.check("kernel normalization over 5 mother sizes",
              max_norm_residual <= 1e-9,
              "max |mass - 1| = " + fmt(max_norm_residual) + " (tolerance 1e-9)");

  const double beta_check = mc.beta.value_or(0.1);
  const cell::CellCycleModel check_model(alpha, sigma, beta_check);
  double max_cf_diff = 0.0;
  for (int j = 0; j < 5; ++j) {
    const double x = 2.0 * sigma * std::pow(50.0, j / 4.0);
    const double closed = cell::perron_power_closed_form(check_model, x);
    const double quad = cell::perron_power_quadrature(check_model, x, 1e-9);
    max_cf_diff = std::max(max_cf_diff,
                           std::abs(closed - quad) / std::max(1.0, std::abs(closed)));
  }
  table.check("power-density image, closed form vs quadrature (beta " +
                  format_double(beta_check) + ")",
              max_cf_diff <= 1e-6,
              "max relative difference " + fmt(max_cf_diff) + " (tolerance 1e-6)");

  const double f0 = cell::certificate_margin(model, 0.0);
  table.check("certificate margin at beta 0", f0 == 0.0, "f(0) = " + fmt(f0));

  // One-sided second-order difference, since the margin is defined on beta >= 0.
  const double h = 1e-5;
  const double fd_slope = (-3.0 * f0 + 4.0 * cell::certificate_margin(model, h) -
                           cell::certificate_margin(model, 2.0 * h)) /
                          (2.0 * h);
  const double analytic_slope = -alpha * std::log(sigma) - 1.0;
  table.check("margin derivative at 0 vs finite differences",
              std::abs(fd_slope - analytic_slope) <= 1e-6,
              fmt(analytic_slope) + " vs " + fmt(fd_slope) + " (tolerance 1e-6)");

  // Duality with the Pareto density of scale sigma and shape alpha, which is
  // exactly sampleable through its inverse distribution function.
  RandomStream rng(cfg.seed);
  const MonteCarloEstimate res = cell::duality_residual(
      model,
      [alpha, sigma](double y) {
        return (alpha / sigma) * std::pow(y / sigma, -1.0 - alpha);
      },
      [alpha, sigma](RandomStream& r) {
        return sigma * std::pow(r.uniform_pos(), -1.0 / alpha);
      },
      sigma, 2.0 * sigma, 200000, rng.substream(1));
  const bool duality_ok = std::abs(res.value) <= 3.0 * res.std_error + 1e-8;
  table.check("duality residual (Pareto density)", duality_ok,
              "|" + fmt(res.value) + "| vs 3 x std error " +
                  fmt(3.0 * res.std_error));

  if (!opts.quiet) {
    std::cout << "validation: " << (table.all_pass() ? "PASS" : "FAIL") << "\n";
  }
  return table.all_pass() ? 0 : 1;
}

// ---------------------------------------------------------------------------
// certify

nlohmann::json report_to_json(const certify::CertificateReport& report) {
  nlohmann::json violations = nlohmann::json::array();
  std::size_t shown = 0;
  for (const certify::Violation& v : report.violations) {
    if (shown++ == 100) break;  // full count stays in n_violations
    violations.push_back({{"coordinates", v.coordinates}, {"ratio", v.ratio}});
  }
  nlohmann::json integrability = nlohmann::json::array();
  for (const certify::IntegrabilityEstimate& e : report.integrability) {
    integrability.push_back({{"param", e.param},
                             {"value", e.estimate.value},
                             {"std_error", e.estimate.std_error},
                             {"finite", e.finite}});
  }
  nlohmann::json samples = nlohmann::json::array();
  for (const certify::SampleMargin& s : report.samples) {
    samples.push_back({{"coordinates", s.coordinates},
                       {"margin", s.margin},
                       {"ratio", s.ratio}});
  }
  return {{"verdict", certify::to_string(report.verdict)},
          {"reason", report.reason},
          {"n_points", report.n_points},
          {"min_margin", report.min_margin},
          {"n_resampled", report.n_resampled},
          {"n_violations", report.violations.size()},
          {"violations", violations},
          {"integrability", integrability},
          {"samples", samples}};
}

void write_margins_csv(const fs::path& path,
                       const certify::CertificateReport& report) {
  std::ostringstream csv;
  csv << "point_id,margin,ratio";
  const std::size_t dim =
      report.samples.empty() ? 0 : report.samples[0].coordinates.size();
  for (std::size_t i = 0; i < dim; ++i) csv << ",x" << i;
  csv << "\n";
  for (std::size_t i = 0; i < report.samples.size(); ++i) {
    const certify::SampleMargin& s = report.samples[i];
    csv << i << "," << format_double(s.margin) << "," << format_double(s.ratio);
    for (const double c : s.coordinates) csv << "," << format_double(c);
    csv << "\n";
  }
  atomic_write(path, csv.str());
}

int finish_certify(const ExperimentConfig& cfg, const CommandOptions& opts,
                   const certify::CertificateReport& report,
                   nlohmann::json extra) {
  nlohmann::json doc = {{"command", "certify"},
                        {"model", model_to_json(cfg.model)},
                        {"seed", cfg.seed},
                        {"family", family_to_json(cfg.family)},
                        {"plan",
                         {{"n_points", cfg.certificate.n_points},
                          {"exclusion_radius", cfg.certificate.exclusion_radius},
                          {"margin_floor", cfg.certificate.margin_floor}}},
                        {"result", report_to_json(report)}};
  for (auto it = extra.begin(); it != extra.end(); ++it) {
    doc["result"][it.key()] = it.value();
  }

  const fs::path dir = resolve_output_dir(opts, cfg);
  write_json(dir / "certificate.json", doc);
  if (cfg.output.wants("csv")) write_margins_csv(dir / "margins.csv", report);

  if (!opts.quiet) {
    std::cout << "verdict: " << certify::to_string(report.verdict);
    if (!report.reason.empty()) std::cout << " (" << report.reason << ")";
    std::cout << "\n";
    if (!report.samples.empty()) {
      std::cout << "min margin " << fmt(report.min_margin) << " over "
                << report.n_points << " points, " << report.violations.size()
                << " violations, " << report.n_resampled << " resamples\n";
    }
    std::cout << "report: " << (dir / "certificate.json").string() << "\n";
  }
  switch (report.verdict) {
    case certify::Verdict::certified:
      return 0;
    case certify::Verdict::violated:
      return 1;
    case certify::Verdict::inconclusive:
      return 3;
  }
  return 3;
}

int certify_qnd(const ExperimentConfig& cfg, const CommandOptions& opts) {
  const qnd::MeasurementEnsemble ensemble = build_ensemble(cfg.model.qnd);
  const IfsModel<QuantumState> model = qnd::to_ifs_model(ensemble);
  const qnd::FockLyapunovDensity fock(ensemble.dim());

  const certify::CertificatePlan plan{cfg.certificate.n_points,
                                      cfg.certificate.exclusion_radius,
                                      cfg.certificate.margin_floor};
  const certify::CertificateReport report = certify::check_proper_subinvariance(
      model, [&fock](const QuantumState& p) { return fock(p); },
      [&fock](const QuantumState& p) { return fock.singular_distance(p); },
      plan, cfg.family, cfg.certificate.integrability_samples,
      RandomStream(cfg.seed));
  return finish_certify(cfg, opts, report,
                        {{"density", "fock-blowup"},
                         {"exclusion", "min coordinate modulus below radius"}});
}

int certify_cell(const ExperimentConfig& cfg, const CommandOptions& opts) {
  const CellModelConfig& mc = cfg.model.cell;
  const cell::CellCycleModel base(mc.alpha, mc.sigma, 0.0);
  const double slope_at_zero = -mc.alpha * std::log(mc.sigma) - 1.0;

  std::optional<double> beta = mc.beta;
  std::string beta_source = "config";
  if (!beta.has_value()) {
    beta = cell::find_beta(base, cfg.certificate.beta_max,
                           cfg.certificate.beta_grid);
    beta_source = "search";
  }

  nlohmann::json extra = {{"density", "power x^(beta-1)"},
                          {"sweeping_regime", base.sweeping_regime()},
                          {"margin_derivative_at_zero", slope_at_zero},
                          {"beta_source", beta_source},
                          {"x_max", cfg.certificate.x_max}};

  if (!beta.has_value()) {
    certify::CertificateReport report;
    report.verdict = certify::Verdict::inconclusive;
    report.reason =
        "no exponent with negative certificate margin on (0, " +
        format_double(cfg.certificate.beta_max) +
        "]; margin derivative at 0 is " + format_double(slope_at_zero) +
        " (non-negative slope leaves no admissible exponent near 0)";
    extra["beta"] = nullptr;
    return finish_certify(cfg, opts, report, extra);
  }

  const cell::CellCycleModel model(mc.alpha, mc.sigma, *beta);
  extra["beta"] = *beta;
  extra["exponent_margin"] = cell::certificate_margin(model, *beta);

  const certify::CertificatePlan plan{cfg.certificate.n_points,
                                      cfg.certificate.exclusion_radius,
                                      cfg.certificate.margin_floor};
  const double beta_val = *beta;
  const certify::CertificateReport report =
      certify::check_proper_subinvariance_half_line(
          [beta_val](double x) { return std::pow(x, -1.0 + beta_val); },
          [&model](double x) { return cell::perron_power_closed_form(model, x); },
          model.sigma(), cfg.certificate.x_max, plan, cfg.family,
          RandomStream(cfg.seed));
  return finish_certify(cfg, opts, report, extra);
}

// ---------------------------------------------------------------------------
// simulate

void write_sweeping_csv(const fs::path& path,
                        const certify::SweepingReport& report) {
  std::ostringstream csv;
  csv << "member_id,member_param,checkpoint,mass,std_error\n";
  for (const certify::SweepingRow& row : report.rows) {
    csv << row.member_id << "," << format_double(row.member_param) << ","
        << row.checkpoint << "," << format_double(row.mass) << ","
        << format_double(row.std_error) << "\n";
  }
  atomic_write(path, csv.str());
}

nlohmann::json sweeping_to_json(const ExperimentConfig& cfg,
                                const certify::SweepingReport& report) {
  nlohmann::json members = nlohmann::json::array();
  const std::size_t n_cp = report.checkpoints.size();
  for (std::size_t m = 0; m < report.member_params.size(); ++m) {
    nlohmann::json masses = nlohmann::json::array();
    for (std::size_t c = 0; c < n_cp; ++c) {
      const certify::SweepingRow& row = report.rows[m * n_cp + c];
      masses.push_back({{"checkpoint", row.checkpoint},
                        {"mass", row.mass},
                        {"std_error", row.std_error}});
    }
    members.push_back({{"param", report.member_params[m]},
                       {"trend", report.trend[m]},
                       {"masses", masses}});
  }
  return {{"command", "simulate"},
          {"model", model_to_json(cfg.model)},
          {"seed", cfg.seed},
          {"n_trajectories", report.n_trajectories},
          {"checkpoints", report.checkpoints},
          {"workers", cfg.workers},
          {"family", family_to_json(cfg.family)},
          {"trend_rule",
           "decaying when each step stays within 3 combined std errors of "
           "non-increase and the final mass is below the initial mass"},
          {"members", members}};
}

int finish_simulate(const ExperimentConfig& cfg, const CommandOptions& opts,
                    const certify::SweepingReport& report,
                    nlohmann::json doc) {
  const fs::path dir = resolve_output_dir(opts, cfg);
  write_sweeping_csv(dir / "sweeping.csv", report);
  write_json(dir / "sweeping.json", doc);

  if (!opts.quiet) {
    const std::size_t n_cp = report.checkpoints.size();
    for (std::size_t m = 0; m < report.member_params.size(); ++m) {
      const certify::SweepingRow& first = report.rows[m * n_cp];
      const certify::SweepingRow& last = report.rows[m * n_cp + n_cp - 1];
      std::cout << "member " << format_double(report.member_params[m])
                << ": mass " << fmt(first.mass) << " -> " << fmt(last.mass)
                << " (" << report.trend[m] << ")\n";
    }
    std::cout << "report: " << (dir / "sweeping.csv").string() << "\n";
  }
  return 0;
}

int simulate_qnd(const ExperimentConfig& cfg, const CommandOptions& opts) {
  const qnd::MeasurementEnsemble ensemble = build_ensemble(cfg.model.qnd);
  const IfsModel<QuantumState> model = qnd::to_ifs_model(ensemble);
  const IfsProcess<QuantumState> proc{&model};
  const int dim = ensemble.dim();

  if (!opts.quiet) {
    std::cout << "running " << cfg.n_trajectories << " trajectories to step "
              << cfg.checkpoints.back() << " (" << cfg.workers << " worker"
              << (cfg.workers == 1 ? "" : "s") << ")\n";
  }

  std::vector<TrajectorySnapshot<QuantumState>> snapshots;
  const certify::SweepingReport report =
      certify::sweeping_diagnostic<QuantumState, IfsProcess<QuantumState>>(
          proc, [dim](RandomStream& r) { return sample_uniform_sphere(dim, r); },
          [](const QuantumState& s, double eps) {
            return s.min_abs_component() >= eps;
          },
          cfg.family, cfg.checkpoints, cfg.n_trajectories,
          RandomStream(cfg.seed), cfg.workers, &snapshots);

  nlohmann::json doc = sweeping_to_json(cfg, report);
  if (cfg.model.qnd.is_diagonal) {
    // Companion observable from the same ensemble: how much of the population
    // sits within delta of a basis direction.  Informational only.
    const double delta = 0.01;
    nlohmann::json points = nlohmann::json::array();
    for (const auto& snap : snapshots) {
      long long count = 0;
      for (const QuantumState& s : snap.states) {
        if (s.max_abs2_component() >= 1.0 - delta) ++count;
      }
      points.push_back(
          {{"checkpoint", snap.step_index},
           {"fraction", static_cast<double>(count) /
                            static_cast<double>(cfg.n_trajectories)}});
    }
    doc["basis_proximity"] = {{"delta", delta}, {"points", points}};
  }
  return finish_simulate(cfg, opts, report, doc);
}

int simulate_cell(const ExperimentConfig& cfg, const CommandOptions& opts) {
  const CellModelConfig& mc = cfg.model.cell;
  const cell::CellCycleModel model(mc.alpha, mc.sigma, mc.beta.value_or(0.0));
  const cell::CellCycleProcess proc{model};
  const double sigma = model.sigma();

  if (!opts.quiet) {
    std::cout << "running " << cfg.n_trajectories << " trajectories to step "
              << cfg.checkpoints.back() << " (" << cfg.workers << " worker"
              << (cfg.workers == 1 ? "" : "s") << ")\n";
  }

  const certify::SweepingReport report =
      certify::sweeping_diagnostic<double, cell::CellCycleProcess>(
          proc, [sigma](RandomStream& r) { return sigma * (1.0 + r.uniform()); },
          [](const double& x, double a) { return x < a; }, cfg.family,
          cfg.checkpoints, cfg.n_trajectories, RandomStream(cfg.seed),
          cfg.workers);
  return finish_simulate(cfg, opts, report, sweeping_to_json(cfg, report));
}

}  // namespace

int cmd_validate(const CommandOptions& opts) {
  const ExperimentConfig cfg = parse_config_file(opts.config_path);
  return cfg.model.kind == ModelConfig::Kind::qnd ? validate_qnd(cfg, opts)
                                                  : validate_cell(cfg, opts);
}

int cmd_certify(const CommandOptions& opts) {
  const ExperimentConfig cfg = parse_config_file(opts.config_path);
  return cfg.model.kind == ModelConfig::Kind::qnd ? certify_qnd(cfg, opts)
                                                  : certify_cell(cfg, opts);
}

int cmd_simulate(const CommandOptions& opts) {
  const ExperimentConfig cfg = parse_config_file(opts.config_path);
  return cfg.model.kind == ModelConfig::Kind::qnd ? simulate_qnd(cfg, opts)
                                                  : simulate_cell(cfg, opts);
}

}  // namespace sweepcert::cli
