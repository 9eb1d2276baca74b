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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <limits>

#include "sweepcert/cell_cycle.hpp"
#include "sweepcert/certify.hpp"
#include "sweepcert/qnd.hpp"
#include "sweepcert/sphere_sampling.hpp"

using namespace sweepcert;
using namespace sweepcert::certify;

namespace {

qnd::MeasurementEnsemble example_ensemble() {
  return qnd::MeasurementEnsemble::diagonal({{0.6, 0.8}, {0.8, 0.6}});
}

}  // namespace

TEST_CASE("verdict names") {
  CHECK(to_string(Verdict::certified) == "certified");
  CHECK(to_string(Verdict::violated) == "violated");
  CHECK(to_string(Verdict::inconclusive) == "inconclusive");
}

TEST_CASE("default families") {
  const FamilySpec sphere = FamilySpec::sphere_default();
  CHECK(sphere.kind == FamilySpec::Kind::sphere_min_coordinate);
  CHECK(sphere.params == std::vector<double>{0.05, 0.1, 0.2, 0.3});
  const FamilySpec line = FamilySpec::half_line_default();
  CHECK(line.kind == FamilySpec::Kind::half_line_interval);
  CHECK(line.params == std::vector<double>{1.0, 2.0, 4.0, 8.0});
}

TEST_CASE("blow-up density is certified for the diagonal ensemble") {
  const qnd::MeasurementEnsemble e = example_ensemble();
  const IfsModel<QuantumState> model = qnd::to_ifs_model(e);
  const qnd::FockLyapunovDensity fock(2);
  const CertificatePlan plan{2000, 1e-3, 1e-9};
  const CertificateReport report = check_proper_subinvariance(
      model, [&fock](const QuantumState& p) { return fock(p); },
      [&fock](const QuantumState& p) { return fock.singular_distance(p); },
      plan, FamilySpec::sphere_default(), 20000, RandomStream(77));

  CHECK(report.verdict == Verdict::certified);
  CHECK(report.n_points == 2000);
  CHECK(report.samples.size() == 2000);
  CHECK(report.violations.empty());
  CHECK(report.min_margin > 1e-9);
  REQUIRE(report.integrability.size() == 4);
  for (const IntegrabilityEstimate& est : report.integrability) {
    CHECK(est.finite);
    CHECK(est.estimate.value > 0.0);
  }

  // Each sampled margin must reproduce 1 - (factorized ratio) at its point.
  for (std::size_t i = 0; i < report.samples.size(); i += 97) {
    const SampleMargin& s = report.samples[i];
    const Eigen::VectorXd coords = Eigen::Map<const Eigen::VectorXd>(
        s.coordinates.data(), static_cast<long>(s.coordinates.size()));
    const double ratio =
        qnd::subinvariance_ratio(e, QuantumState::from_realified(coords));
    CHECK(s.ratio == doctest::Approx(ratio).epsilon(1e-10));
    CHECK(s.margin == doctest::Approx(1.0 - ratio).epsilon(1e-10));
  }
}

TEST_CASE("an expanding half-line density is reported violated") {
  // For alpha = 1, sigma = 1/2 the margin function is positive at beta = 2,
  // and the image of x^{1} exceeds it everywhere.
  const cell::CellCycleModel m(1.0, 0.5, 2.0);
  const CertificatePlan plan{500, 1e-3, 1e-9};
  const CertificateReport report = check_proper_subinvariance_half_line(
      [](double x) { return std::pow(x, 1.0); },
      [&m](double x) { return cell::perron_power_closed_form(m, x); }, 0.5,
      1000.0, plan, FamilySpec::half_line_default(), RandomStream(79));
  CHECK(report.verdict == Verdict::violated);
  CHECK_FALSE(report.violations.empty());
  CHECK(report.min_margin < -1e-9);
  for (const Violation& v : report.violations) CHECK(v.ratio > 1.0);
}

TEST_CASE("an exactly invariant density is inconclusive, not violated") {
  // alpha = 1, sigma = 1/2, beta = 1: the constant density is invariant, so
  // every margin is exactly zero -- inside the floor band.
  const cell::CellCycleModel m(1.0, 0.5, 1.0);
  const CertificatePlan plan{500, 1e-3, 1e-9};
  const CertificateReport report = check_proper_subinvariance_half_line(
      [](double) { return 1.0; },
      [&m](double x) { return cell::perron_power_closed_form(m, x); }, 0.5,
      1000.0, plan, FamilySpec::half_line_default(), RandomStream(81));
  CHECK(report.verdict == Verdict::inconclusive);
  CHECK(report.violations.empty());
  CHECK(report.min_margin == 0.0);
  CHECK(report.reason == "minimum margin not above margin_floor");
}

TEST_CASE("a non-integrable density is inconclusive despite good margins") {
  // Strictly halved by its "image", but with a non-integrable pole at x = 2
  // inside the family member [sigma, 4).
  const auto u = [](double x) { return 1.0 / ((x - 2.0) * (x - 2.0)); };
  const CertificatePlan plan{300, 1e-3, 1e-9};
  FamilySpec family{FamilySpec::Kind::half_line_interval, {4.0}};
  const CertificateReport report = check_proper_subinvariance_half_line(
      u, [&u](double x) { return 0.5 * u(x); }, 0.5, 1000.0, plan, family,
      RandomStream(83));
  CHECK(report.verdict == Verdict::inconclusive);
  CHECK(report.reason == "an integrability estimate is not finite");
  CHECK(report.violations.empty());
  REQUIRE(report.integrability.size() == 1);
  CHECK_FALSE(report.integrability[0].finite);
}

TEST_CASE("excessive resampling is inconclusive") {
  // Excluding everything within 0.5 of the singular set rejects about half
  // the sphere: far beyond the 0.1% budget.
  const qnd::MeasurementEnsemble e = example_ensemble();
  const IfsModel<QuantumState> model = qnd::to_ifs_model(e);
  const qnd::FockLyapunovDensity fock(2);
  const CertificatePlan plan{200, 0.5, 1e-9};
  const CertificateReport report = check_proper_subinvariance(
      model, [&fock](const QuantumState& p) { return fock(p); },
      [&fock](const QuantumState& p) { return fock.singular_distance(p); },
      plan, FamilySpec::sphere_default(), 5000, RandomStream(85));
  CHECK(report.verdict == Verdict::inconclusive);
  CHECK(report.reason == "resample rate above 0.1% of requested points");
  CHECK(report.n_resampled * 1000 > report.n_points);
}

TEST_CASE("half-line integrability estimates") {
  FamilySpec family{FamilySpec::Kind::half_line_interval, {2.0}};
  const auto estimates = check_local_integrability_half_line(
      [](double x) { return std::pow(x, -0.9); }, 0.5, family);
  REQUIRE(estimates.size() == 1);
  CHECK(estimates[0].finite);
  CHECK(estimates[0].estimate.value ==
        doctest::Approx(1.3874047099948575).epsilon(1e-9));
  CHECK(estimates[0].estimate.std_error == 0.0);  // quadrature, not sampling

  // Member collapses when its endpoint is below sigma.
  FamilySpec tiny{FamilySpec::Kind::half_line_interval, {0.3}};
  const auto empty = check_local_integrability_half_line(
      [](double) { return 1.0; }, 0.5, tiny);
  CHECK(empty[0].finite);
  CHECK(empty[0].estimate.value == 0.0);

  // Pole inside the member: quadrature budget blows, flagged non-finite.
  const auto diverging = check_local_integrability_half_line(
      [](double x) { return 1.0 / ((x - 1.0) * (x - 1.0)); }, 0.5, family);
  CHECK_FALSE(diverging[0].finite);

  CHECK_THROWS_AS(check_local_integrability_half_line(
                      [](double) { return 1.0; }, 0.5,
                      FamilySpec::sphere_default()),
                  InvalidArgumentError);
}

TEST_CASE("sphere integrability estimates grow toward the singular set") {
  const qnd::FockLyapunovDensity fock(2);
  const auto estimates = check_local_integrability_sphere(
      [&fock](const QuantumState& p) { return fock(p); }, 2,
      FamilySpec::sphere_default(), 200000, RandomStream(87));
  REQUIRE(estimates.size() == 4);
  for (const IntegrabilityEstimate& est : estimates) {
    CHECK(est.finite);
    CHECK(est.estimate.value > 0.0);
  }
  // Members are nested: the integral over A_{0.05} dominates A_{0.3}'s.
  CHECK(estimates[0].estimate.value > estimates[3].estimate.value);

  CHECK_THROWS_AS(
      check_local_integrability_sphere(
          [](const QuantumState&) { return 1.0; }, 2,
          FamilySpec::half_line_default(), 100, RandomStream(1)),
      InvalidArgumentError);
}

namespace {

struct Doubling {
  double advance(const double& x, RandomStream&) const { return 2.0 * x; }
  double membership_error(const double&) const { return 0.0; }
  double project(const double& x) const { return x; }
};

}  // namespace

TEST_CASE("sweeping diagnostic trends on a transparent process") {
  const auto init = [](RandomStream&) { return 1.0; };
  const auto below = [](const double& x, double a) { return x < a; };
  FamilySpec family{FamilySpec::Kind::half_line_interval, {4.0}};
  const SweepingReport report = sweeping_diagnostic<double, Doubling>(
      Doubling{}, init, below, family, {0, 2, 4}, 100, RandomStream(89));
  REQUIRE(report.rows.size() == 3);
  CHECK(report.rows[0].mass == 1.0);  // x = 1 inside [.,4)
  CHECK(report.rows[1].mass == 0.0);  // x = 4 outside
  CHECK(report.rows[2].mass == 0.0);
  CHECK(report.trend[0] == "decaying");
  CHECK(report.decaying(0));
  CHECK(report.rows[0].std_error == 0.0);  // degenerate binomial at mass 1

  // Whole space: mass one forever, so "decaying" must not be claimed.
  FamilySpec whole{FamilySpec::Kind::half_line_interval,
                   {std::numeric_limits<double>::infinity()}};
  const SweepingReport conserved = sweeping_diagnostic<double, Doubling>(
      Doubling{}, init, below, whole, {0, 2, 4}, 100, RandomStream(89));
  for (const SweepingRow& row : conserved.rows) CHECK(row.mass == 1.0);
  CHECK(conserved.trend[0] == "not decaying");

  CHECK_THROWS_AS((sweeping_diagnostic<double, Doubling>(
                      Doubling{}, init, below, family, {1, 2}, 10,
                      RandomStream(1))),
                  InvalidArgumentError);
}

TEST_CASE("sweeping rows respect nested members at every checkpoint") {
  const qnd::MeasurementEnsemble e = example_ensemble();
  const IfsModel<QuantumState> model = qnd::to_ifs_model(e);
  const IfsProcess<QuantumState> proc{&model};
  std::vector<TrajectorySnapshot<QuantumState>> snapshots;
  const std::vector<long long> cps = {0, 5, 10};
  const SweepingReport report =
      sweeping_diagnostic<QuantumState, IfsProcess<QuantumState>>(
          proc, [](RandomStream& r) { return sample_uniform_sphere(2, r); },
          [](const QuantumState& s, double eps) {
            return s.min_abs_component() >= eps;
          },
          FamilySpec::sphere_default(), cps, 500, RandomStream(91), 1,
          &snapshots);

  REQUIRE(report.rows.size() == 12);
  // Larger eps means a smaller member: mass can only shrink along the family.
  for (std::size_t c = 0; c < cps.size(); ++c) {
    for (int m = 0; m + 1 < 4; ++m) {
      const double outer = report.rows[m * cps.size() + c].mass;
      const double inner = report.rows[(m + 1) * cps.size() + c].mass;
      CHECK(inner <= outer);
    }
  }

  // The exported snapshots are the ensemble the rows were computed from.
  REQUIRE(snapshots.size() == 3);
  for (std::size_t c = 0; c < cps.size(); ++c) {
    CHECK(snapshots[c].step_index == cps[c]);
    REQUIRE(snapshots[c].states.size() == 500);
    long long count = 0;
    for (const QuantumState& s : snapshots[c].states) {
      if (s.min_abs_component() >= 0.1) ++count;
    }
    CHECK(static_cast<double>(count) / 500.0 ==
          doctest::Approx(report.rows[1 * cps.size() + c].mass));
  }
}

TEST_CASE("certificate input validation") {
  const qnd::FockLyapunovDensity fock(2);
  IfsModel<QuantumState> off_sphere;
  off_sphere.space = {SpaceKind::half_line, 0, 0.5};
  CHECK_THROWS_AS(check_proper_subinvariance(
                      off_sphere, [&](const QuantumState& p) { return fock(p); },
                      [&](const QuantumState& p) {
                        return fock.singular_distance(p);
                      },
                      CertificatePlan{}, FamilySpec::sphere_default(), 100,
                      RandomStream(1)),
                  InvalidArgumentError);
  CHECK_THROWS_AS(check_proper_subinvariance_half_line(
                      [](double) { return 1.0; }, [](double) { return 0.5; },
                      0.5, 0.4, CertificatePlan{},
                      FamilySpec::half_line_default(), RandomStream(1)),
                  InvalidArgumentError);
}
