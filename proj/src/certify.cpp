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

#include "sweepcert/certify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>

#include "sweepcert/errors.hpp"
#include "sweepcert/quadrature.hpp"
#include "sweepcert/sphere_sampling.hpp"

namespace sweepcert::certify {

namespace {

// Per-point resample budget; a density singular on half the sphere would blow
// the 0.1% inconclusive threshold long before exhausting this.
constexpr int kMaxAttemptsPerPoint = 100000;

// Margin/violation bookkeeping shared by the sphere and half-line checkers.
// The callbacks draw a candidate point, decide whether it must be excluded,
// and evaluate u and (P u).
template <class State>
void run_margin_sweep(
    const std::function<State(RandomStream&)>& sampler,
    const std::function<bool(const State&)>& excluded,
    const std::function<double(const State&)>& u_value,
    const std::function<double(const State&)>& perron_value,
    const std::function<std::vector<double>(const State&)>& coordinates,
    const CertificatePlan& plan, RandomStream& rng, CertificateReport* report) {
  for (long long i = 0; i < plan.n_points; ++i) {
    bool recorded = false;
    for (int attempt = 0; attempt < kMaxAttemptsPerPoint; ++attempt) {
      const State x = sampler(rng);
      if (excluded(x)) {
        ++report->n_resampled;
        continue;
      }
      double uv = 0.0, pu = 0.0;
      bool finite = true;
      try {
        uv = u_value(x);
        pu = perron_value(x);
        finite = std::isfinite(uv) && std::isfinite(pu) && uv > 0.0;
      } catch (const SingularEvaluationError&) {
        finite = false;
      }
      if (!finite) {
        ++report->n_resampled;
        continue;
      }
      const double ratio = pu / uv;
      const double margin = 1.0 - ratio;
      report->min_margin = std::min(report->min_margin, margin);
      if (margin < -plan.margin_floor) {
        report->violations.push_back({coordinates(x), ratio});
      }
      report->samples.push_back({coordinates(x), margin, ratio});
      recorded = true;
      break;
    }
    if (!recorded) {
      throw SingularityExposureError(
          "check_proper_subinvariance: could not find an evaluable point",
          report->n_resampled, plan.n_points);
    }
  }
  report->n_points = plan.n_points;
}

void finalize_verdict(const CertificatePlan& plan, CertificateReport* report) {
  bool integrable = true;
  for (const IntegrabilityEstimate& e : report->integrability) {
    integrable = integrable && e.finite;
  }
  const bool noisy_resampling =
      report->n_resampled * 1000 > report->n_points;  // above 0.1%

  if (!report->violations.empty()) {
    report->verdict = Verdict::violated;
    report->reason = std::to_string(report->violations.size()) +
                     " sampled point(s) with margin below -margin_floor";
  } else if (noisy_resampling) {
    report->verdict = Verdict::inconclusive;
    report->reason = "resample rate above 0.1% of requested points";
  } else if (!integrable) {
    report->verdict = Verdict::inconclusive;
    report->reason = "an integrability estimate is not finite";
  } else if (!(report->min_margin > plan.margin_floor)) {
    report->verdict = Verdict::inconclusive;
    report->reason = "minimum margin not above margin_floor";
  } else {
    report->verdict = Verdict::certified;
    report->reason = "strict subinvariance margin at every sampled point";
  }
}

}  // namespace

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::certified:
      return "certified";
    case Verdict::violated:
      return "violated";
    case Verdict::inconclusive:
      return "inconclusive";
  }
  return "inconclusive";
}

CertificateReport check_proper_subinvariance(
    const IfsModel<QuantumState>& model,
    const std::function<double(const QuantumState&)>& u,
    const std::function<double(const QuantumState&)>& singular_distance,
    const CertificatePlan& plan, const FamilySpec& family,
    long long integrability_n_mc, RandomStream rng) {
  if (plan.n_points < 1) {
    throw InvalidArgumentError("check_proper_subinvariance: n_points must be >= 1");
  }
  if (model.space.kind != SpaceKind::complex_sphere) {
    throw InvalidArgumentError(
        "check_proper_subinvariance: model does not live on the sphere");
  }
  const int dim = model.space.dim_complex;
  CertificateReport report;
  RandomStream sweep_rng = rng.substream(0);
  run_margin_sweep<QuantumState>(
      [dim](RandomStream& r) { return sample_uniform_sphere(dim, r); },
      [&](const QuantumState& x) {
        return singular_distance(x) < plan.exclusion_radius;
      },
      u, [&](const QuantumState& x) { return perron_pointwise(model, u, x); },
      [](const QuantumState& x) {
        const Eigen::VectorXd r = x.realified();
        return std::vector<double>(r.data(), r.data() + r.size());
      },
      plan, sweep_rng, &report);
  report.integrability = check_local_integrability_sphere(
      u, dim, family, integrability_n_mc, rng.substream(1));
  finalize_verdict(plan, &report);
  return report;
}

CertificateReport check_proper_subinvariance_half_line(
    const std::function<double(double)>& u,
    const std::function<double(double)>& perron_u, double sigma, double x_max,
    const CertificatePlan& plan, const FamilySpec& family, RandomStream rng) {
  if (plan.n_points < 1) {
    throw InvalidArgumentError("check_proper_subinvariance: n_points must be >= 1");
  }
  if (!(sigma > 0.0) || !(x_max > sigma)) {
    throw InvalidArgumentError(
        "check_proper_subinvariance: need 0 < sigma < x_max");
  }
  CertificateReport report;
  const double log_span = std::log(x_max / sigma);
  RandomStream sweep_rng = rng.substream(0);
  run_margin_sweep<double>(
      [&](RandomStream& r) { return sigma * std::exp(r.uniform() * log_span); },
      [](double) { return false; },  // no singular set on the half line
      u, perron_u, [](double x) { return std::vector<double>{x}; }, plan,
      sweep_rng, &report);
  report.integrability = check_local_integrability_half_line(u, sigma, family);
  finalize_verdict(plan, &report);
  return report;
}

std::vector<IntegrabilityEstimate> check_local_integrability_sphere(
    const std::function<double(const QuantumState&)>& u, int dim_complex,
    const FamilySpec& family, long long n_mc, RandomStream rng) {
  if (family.kind != FamilySpec::Kind::sphere_min_coordinate) {
    throw InvalidArgumentError(
        "check_local_integrability_sphere: family kind mismatch");
  }
  std::vector<IntegrabilityEstimate> estimates;
  estimates.reserve(family.params.size());
  for (std::size_t m = 0; m < family.params.size(); ++m) {
    const double eps = family.params[m];
    IntegrabilityEstimate entry;
    entry.param = eps;
    try {
      // Indicator first: u is only evaluated inside the member, where it is
      // bounded away from its singular set.
      entry.estimate = mc_integral_on_sphere(
          [&](const QuantumState& phi) {
            return phi.min_abs_component() >= eps ? u(phi) : 0.0;
          },
          dim_complex, n_mc, rng.substream(static_cast<std::uint64_t>(m)));
      entry.finite = std::isfinite(entry.estimate.value) &&
                     std::isfinite(entry.estimate.std_error);
    } catch (const SingularityExposureError&) {
      entry.finite = false;
    }
    estimates.push_back(entry);
  }
  return estimates;
}

std::vector<IntegrabilityEstimate> check_local_integrability_half_line(
    const std::function<double(double)>& u, double sigma,
    const FamilySpec& family, double tol) {
  if (family.kind != FamilySpec::Kind::half_line_interval) {
    throw InvalidArgumentError(
        "check_local_integrability_half_line: family kind mismatch");
  }
  std::vector<IntegrabilityEstimate> estimates;
  estimates.reserve(family.params.size());
  for (const double a : family.params) {
    IntegrabilityEstimate entry;
    entry.param = a;
    if (a <= sigma) {
      entry.estimate = {0.0, 0.0, 1};
      entry.finite = true;
    } else {
      try {
        entry.estimate = {integrate_1d(u, sigma, a, tol), 0.0, 1};
        entry.finite = std::isfinite(entry.estimate.value);
      } catch (const QuadratureError&) {
        entry.finite = false;
      }
    }
    estimates.push_back(entry);
  }
  return estimates;
}

std::vector<std::pair<long long, double>> fock_proximity_diagnostic(
    const qnd::MeasurementEnsemble& ensemble, long long n_traj,
    long long horizon, double delta, RandomStream rng,
    std::function<QuantumState(RandomStream&)> initial_sampler, int n_workers) {
  if (n_traj < 1) {
    throw InvalidArgumentError("fock_proximity_diagnostic: n_traj must be >= 1");
  }
  if (horizon < 0) {
    throw InvalidArgumentError("fock_proximity_diagnostic: horizon must be >= 0");
  }
  if (!(delta >= 0.0)) {
    throw InvalidArgumentError("fock_proximity_diagnostic: delta must be >= 0");
  }
  std::vector<long long> checkpoints{0};
  if (horizon > 0) {
    const long long stride = std::max<long long>(1, horizon / 10);
    for (long long c = stride; c < horizon; c += stride) checkpoints.push_back(c);
    checkpoints.push_back(horizon);
  }
  const IfsModel<QuantumState> model = qnd::to_ifs_model(ensemble);
  const int dim = ensemble.dim();
  std::function<QuantumState(RandomStream&)> sampler = std::move(initial_sampler);
  if (!sampler) {
    sampler = [dim](RandomStream& r) { return sample_uniform_sphere(dim, r); };
  }
  const auto snapshots =
      run_ensemble(model, sampler, n_traj, checkpoints, rng, n_workers);
  std::vector<std::pair<long long, double>> fractions;
  fractions.reserve(snapshots.size());
  const double threshold = 1.0 - delta;
  for (const auto& snap : snapshots) {
    long long count = 0;
    for (const QuantumState& s : snap.states) {
      if (s.max_abs2_component() >= threshold) ++count;
    }
    fractions.emplace_back(
        snap.step_index,
        static_cast<double>(count) / static_cast<double>(n_traj));
  }
  return fractions;
}

}  // namespace sweepcert::certify
