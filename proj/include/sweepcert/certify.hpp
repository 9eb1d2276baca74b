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

#include <functional>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "sweepcert/markov.hpp"
#include "sweepcert/qnd.hpp"
#include "sweepcert/quantum_state.hpp"
#include "sweepcert/random_stream.hpp"

namespace sweepcert::certify {

enum class Verdict { certified, violated, inconclusive };

std::string to_string(Verdict v);

// Family of finite-measure sets the certificate must be integrable on and the
// sweeping diagnostic measures mass in.  Sphere kind: A_eps = {min_i |phi_i|
// >= eps}, nested, exhausting the sphere minus the coordinate-zero set as
// eps -> 0.  Half-line kind: [sigma, a), exhausting [sigma, inf) as a grows.
struct FamilySpec {
  enum class Kind { sphere_min_coordinate, half_line_interval };
  Kind kind = Kind::sphere_min_coordinate;
  std::vector<double> params;

  static FamilySpec sphere_default() {
    return {Kind::sphere_min_coordinate, {0.05, 0.1, 0.2, 0.3}};
  }
  static FamilySpec half_line_default() {
    return {Kind::half_line_interval, {1.0, 2.0, 4.0, 8.0}};
  }
};

struct IntegrabilityEstimate {
  double param = 0.0;
  MonteCarloEstimate estimate;
  bool finite = false;
};

struct Violation {
  std::vector<double> coordinates;
  double ratio = 0.0;  // (P u)(x) / u(x) at the violating point
};

struct SampleMargin {
  std::vector<double> coordinates;
  double margin = 0.0;  // 1 - (P u)(x) / u(x)
  double ratio = 0.0;
};

struct CertificatePlan {
  long long n_points = 10000;
  double exclusion_radius = 1e-3;  // around the density's singular set
  double margin_floor = 1e-9;
};

struct CertificateReport {
  long long n_points = 0;
  double min_margin = std::numeric_limits<double>::infinity();
  std::vector<Violation> violations;
  std::vector<IntegrabilityEstimate> integrability;
  long long n_resampled = 0;
  Verdict verdict = Verdict::inconclusive;
  std::string reason;
  std::vector<SampleMargin> samples;  // one per evaluated point, in draw order
};

// Verifies (P u)(x) < u(x) at uniformly sampled sphere points outside the
// exclusion zone, plus finiteness of u's integral on every family member.
//
// certified  <=>  no violation, min_margin > margin_floor, all integrability
// estimates finite.  Margins inside the +-floor band, a resample rate above
// 0.1%, or a non-finite integrability estimate give "inconclusive"; a margin
// below -floor gives "violated".
CertificateReport check_proper_subinvariance(
    const IfsModel<QuantumState>& model,
    const std::function<double(const QuantumState&)>& u,
    const std::function<double(const QuantumState&)>& singular_distance,
    const CertificatePlan& plan, const FamilySpec& family,
    long long integrability_n_mc, RandomStream rng);

// Half-line variant: points are log-uniform on [sigma, x_max] and the
// transfer-operator image is supplied as a callback (for the cell model it is
// available in closed form); integrability uses quadrature instead of Monte
// Carlo, so those estimates carry zero standard error.
CertificateReport check_proper_subinvariance_half_line(
    const std::function<double(double)>& u,
    const std::function<double(double)>& perron_u, double sigma, double x_max,
    const CertificatePlan& plan, const FamilySpec& family, RandomStream rng);

// int u * 1_{A_eps} dm per sphere family member, by Monte Carlo.
std::vector<IntegrabilityEstimate> check_local_integrability_sphere(
    const std::function<double(const QuantumState&)>& u, int dim_complex,
    const FamilySpec& family, long long n_mc, RandomStream rng);

// int_sigma^a u dx per half-line family member, by quadrature.
std::vector<IntegrabilityEstimate> check_local_integrability_half_line(
    const std::function<double(double)>& u, double sigma,
    const FamilySpec& family, double tol = 1e-9);

struct SweepingRow {
  int member_id = 0;
  double member_param = 0.0;
  long long checkpoint = 0;
  double mass = 0.0;       // fraction of trajectories inside the member
  double std_error = 0.0;  // binomial
};

struct SweepingReport {
  std::vector<double> member_params;
  std::vector<long long> checkpoints;
  long long n_trajectories = 0;
  std::vector<SweepingRow> rows;      // member-major, checkpoint-minor
  std::vector<std::string> trend;     // per member: "decaying" / "not decaying"

  bool decaying(int member) const {
    return trend[static_cast<std::size_t>(member)] == "decaying";
  }
};

// Empirical set-mass decay: Prob(state_n in A) per family member and
// checkpoint, from one trajectory ensemble.  Trend is "decaying" when the
// mass sequence is non-increasing within 3 combined standard errors at every
// consecutive pair and the final mass is strictly below the initial one.
// When `snapshots_out` is non-null the raw checkpoint states are moved there,
// so callers can run further per-state diagnostics without a second ensemble.
template <class State, class Proc>
SweepingReport sweeping_diagnostic(
    const Proc& proc, const std::function<State(RandomStream&)>& initial_sampler,
    const std::function<bool(const State&, double)>& member_indicator,
    const FamilySpec& family, const std::vector<long long>& checkpoints,
    long long n_traj, RandomStream rng, int n_workers = 1,
    std::vector<TrajectorySnapshot<State>>* snapshots_out = nullptr) {
  if (checkpoints.empty() || checkpoints.front() != 0) {
    throw InvalidArgumentError("sweeping_diagnostic: checkpoints must start at 0");
  }
  auto snapshots = run_ensemble<State, Proc>(
      proc, initial_sampler, n_traj, checkpoints, rng, n_workers);

  SweepingReport report;
  report.member_params = family.params;
  report.checkpoints = checkpoints;
  report.n_trajectories = n_traj;
  for (std::size_t m = 0; m < family.params.size(); ++m) {
    const double param = family.params[m];
    std::vector<double> masses, errors;
    for (const auto& snap : snapshots) {
      long long count = 0;
      for (const State& s : snap.states) {
        if (member_indicator(s, param)) ++count;
      }
      const double p = static_cast<double>(count) / static_cast<double>(n_traj);
      const double se = std::sqrt(p * (1.0 - p) / static_cast<double>(n_traj));
      masses.push_back(p);
      errors.push_back(se);
      report.rows.push_back({static_cast<int>(m), param, snap.step_index, p, se});
    }
    bool monotone = true;
    for (std::size_t c = 0; c + 1 < masses.size(); ++c) {
      const double slack =
          3.0 * std::sqrt(errors[c] * errors[c] + errors[c + 1] * errors[c + 1]);
      if (masses[c + 1] > masses[c] + slack) monotone = false;
    }
    const bool decayed = monotone && masses.back() < masses.front();
    report.trend.push_back(decayed ? "decaying" : "not decaying");
  }
  if (snapshots_out != nullptr) {
    *snapshots_out = std::move(snapshots);
  }
  return report;
}

// Fraction of trajectories with max_i |phi_i|^2 >= 1 - delta at 11 evenly
// spaced checkpoints up to `horizon`.  Exploratory output only: the recursive
// convergence-to-basis-states picture is a conjecture, so no verdict is
// attached.  A null initial sampler means uniform on the sphere.
std::vector<std::pair<long long, double>> fock_proximity_diagnostic(
    const qnd::MeasurementEnsemble& ensemble, long long n_traj,
    long long horizon, double delta, RandomStream rng,
    std::function<QuantumState(RandomStream&)> initial_sampler = {},
    int n_workers = 1);

}  // namespace sweepcert::certify
