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
#include <vector>

#include "sweepcert/cell_cycle.hpp"
#include "sweepcert/errors.hpp"
#include "sweepcert/quadrature.hpp"

using namespace sweepcert;
using cell::CellCycleModel;

TEST_CASE("model parameter validation") {
  CHECK_NOTHROW(CellCycleModel(1.0, 0.5, 0.1));
  CHECK_THROWS_AS(CellCycleModel(0.0, 0.5, 0.1), InvalidArgumentError);
  CHECK_THROWS_AS(CellCycleModel(1.0, 1.0, 0.1), InvalidArgumentError);
  CHECK_THROWS_AS(CellCycleModel(1.0, 0.0, 0.1), InvalidArgumentError);
  CHECK_THROWS_AS(CellCycleModel(1.0, 0.5, -0.1), InvalidArgumentError);

  CHECK(CellCycleModel(1.0, 0.5, 0.0).sweeping_regime());       // -0.693 >= -1
  CHECK_FALSE(CellCycleModel(2.0, 0.5, 0.0).sweeping_regime());  // -1.386 < -1
}

TEST_CASE("kernel piecewise values") {
  const CellCycleModel m(1.0, 0.5, 0.0);
  // Mother below one: (alpha/sigma) (x/sigma)^{-1-alpha} = 2 (2x)^{-2}.
  CHECK(cell::kernel_eval(m, 1.0, 0.6) == doctest::Approx(0.5).epsilon(1e-15));
  // Mother above one gains the y^alpha factor.
  CHECK(cell::kernel_eval(m, 4.0, 2.0) ==
        doctest::Approx(2.0 * std::pow(8.0, -2.0) * 2.0).epsilon(1e-14));
  // Support cutoff at y = x / sigma.
  CHECK(cell::kernel_eval(m, 1.0, 2.0) == 0.0);
  CHECK(cell::kernel_eval(m, 1.0, 1.99) > 0.0);
  CHECK_THROWS_AS(cell::kernel_eval(m, 0.4, 1.0), InvalidArgumentError);
  CHECK_THROWS_AS(cell::kernel_eval(m, 1.0, 0.4), InvalidArgumentError);
}

TEST_CASE("kernel is a probability density in the daughter size") {
  const CellCycleModel m(0.7, 0.6, 0.0);
  for (const double y : {0.6, 0.8, 1.0, 1.5, 4.0}) {
    const double mass = integrate_1d(
        [&](double x) { return cell::kernel_eval(m, x, y); },
        m.sigma() * std::max(1.0, y), std::numeric_limits<double>::infinity(),
        1e-11);
    CHECK(mass == doctest::Approx(1.0).epsilon(1e-9));
  }
}

TEST_CASE("daughter size inverse-distribution transform") {
  const CellCycleModel m(2.0, 0.5, 0.0);
  // u = 1 is the smallest daughter: sigma * max(1, y).
  CHECK(cell::daughter_size_from_uniform(m, 0.7, 1.0) == doctest::Approx(0.5));
  CHECK(cell::daughter_size_from_uniform(m, 3.0, 1.0) == doctest::Approx(1.5));
  // Decreasing in u.
  CHECK(cell::daughter_size_from_uniform(m, 1.0, 0.25) >
        cell::daughter_size_from_uniform(m, 1.0, 0.5));
  CHECK_THROWS_AS(cell::daughter_size_from_uniform(m, 1.0, 0.0),
                  InvalidArgumentError);
  CHECK_THROWS_AS(cell::daughter_size_from_uniform(m, 1.0, 1.5),
                  InvalidArgumentError);
  CHECK_THROWS_AS(cell::daughter_size_from_uniform(m, 0.2, 0.5),
                  InvalidArgumentError);
}

TEST_CASE("sampled daughters follow the kernel distribution") {
  const CellCycleModel m(1.0, 0.5, 0.0);
  const double y = 1.0;  // scale = 0.5, distribution F(x) = 1 - 0.5/x
  RandomStream rng(12345);
  const int n = 2000;
  const int bins = 20;
  std::vector<int> counts(bins, 0);
  for (int i = 0; i < n; ++i) {
    const double x = cell::sample_daughter_size(m, y, rng);
    CHECK(x >= 0.5);
    const double f = 1.0 - 0.5 / x;  // in [0, 1)
    int b = static_cast<int>(f * bins);
    if (b >= bins) b = bins - 1;
    ++counts[b];
  }
  const double expected = static_cast<double>(n) / bins;
  double chi_sq = 0.0;
  for (const int c : counts) {
    chi_sq += (c - expected) * (c - expected) / expected;
  }
  // 19 degrees of freedom, p = 0.001 critical value.
  CHECK(chi_sq < 43.8201959645175);
}

TEST_CASE("interval transition probability matches the kernel integral") {
  const CellCycleModel m(1.0, 0.5, 0.0);
  // Scale 1 for y = 2: P([1.5, 3)) = (1 - 1/3) - (1 - 1/1.5) = 1/3.
  CHECK(cell::interval_transition_probability(m, 2.0, 1.5, 3.0) ==
        doctest::Approx(1.0 / 3.0).epsilon(1e-14));
  const double quad = integrate_1d(
      [&](double x) { return cell::kernel_eval(m, x, 2.0); }, 1.5, 3.0, 1e-11);
  CHECK(quad == doctest::Approx(1.0 / 3.0).epsilon(1e-9));
  // Intervals below the support carry no mass.
  CHECK(cell::interval_transition_probability(m, 2.0, 0.5, 0.9) == 0.0);
  CHECK(cell::interval_transition_probability(
            m, 2.0, 1.0, std::numeric_limits<double>::infinity()) ==
        doctest::Approx(1.0));
  CHECK_THROWS_AS(cell::interval_transition_probability(m, 2.0, 3.0, 1.0),
                  InvalidArgumentError);
}

TEST_CASE("power-density image closed form against frozen values") {
  const CellCycleModel m(1.0, 0.5, 0.1);
  CHECK(cell::perron_power_closed_form(m, 1.0) ==
        doctest::Approx(0.8546290991671385).epsilon(1e-12));
  CHECK(cell::perron_power_closed_form(m, 4.0) ==
        doctest::Approx(0.2723236477231377).epsilon(1e-12));
  CHECK_THROWS_AS(cell::perron_power_closed_form(m, 0.4), InvalidArgumentError);
  CHECK_THROWS_AS(
      cell::perron_power_closed_form(CellCycleModel(1.0, 0.5, 0.0), 1.0),
      InvalidArgumentError);
}

TEST_CASE("closed form equals quadrature across parameters") {
  const struct {
    double alpha, sigma, beta;
  } cases[] = {{1.0, 0.5, 0.1}, {1.0, 0.5, 0.5}, {0.5, 0.8, 0.2}};
  for (const auto& c : cases) {
    const CellCycleModel m(c.alpha, c.sigma, c.beta);
    for (const double x : {1.2 * c.sigma, 3.0 * c.sigma, 40.0 * c.sigma}) {
      const double closed = cell::perron_power_closed_form(m, x);
      const double quad = cell::perron_power_quadrature(m, x, 1e-11);
      CHECK(closed == doctest::Approx(quad).epsilon(1e-8));
    }
  }
}

TEST_CASE("generic density image by quadrature") {
  const CellCycleModel m(1.0, 0.5, 0.0);
  // rho concentrated on [sigma, 1): P rho(x) picks up only the sub-unit branch.
  const auto rho = [](double y) { return y < 1.0 ? 1.0 : 0.0; };
  // For x with x/sigma > 1: integral of 2(2x)^{-2} over y in [0.5, 1) = 0.25/x^2.
  const double val = cell::perron_density(m, rho, 2.0, 1e-10);
  CHECK(val == doctest::Approx(0.25 / 4.0).epsilon(1e-8));
}

TEST_CASE("certificate margin function") {
  const CellCycleModel m(1.0, 0.5, 0.0);
  CHECK(cell::certificate_margin(m, 0.0) == 0.0);  // exact, not approximate
  CHECK(cell::certificate_margin(m, 0.1) ==
        doctest::Approx(-0.0263362906904877).epsilon(1e-12));
  // f(1) = 1 - 0.5 * 2 = 0 exactly for alpha = 1, sigma = 1/2.
  CHECK(cell::certificate_margin(m, 1.0) == 0.0);
  CHECK_THROWS_AS(cell::certificate_margin(m, -0.5), InvalidArgumentError);

  // Slope at zero: -alpha ln(sigma) - 1.
  const double h = 1e-6;
  const double slope =
      (cell::certificate_margin(m, h) - cell::certificate_margin(m, 0.0)) / h;
  CHECK(slope == doctest::Approx(-std::log(0.5) - 1.0).epsilon(1e-5));
}

TEST_CASE("exponent search") {
  const CellCycleModel sweeping(1.0, 0.5, 0.0);
  const auto beta = cell::find_beta(sweeping, 1.0, 100);
  REQUIRE(beta.has_value());
  CHECK(*beta > 0.0);
  CHECK(*beta <= 1.0);
  CHECK(cell::certificate_margin(sweeping, *beta) < -1e-9);

  // Outside the sweeping regime the margin never turns negative.
  const CellCycleModel blocked(2.0, 0.5, 0.0);
  CHECK_FALSE(cell::find_beta(blocked, 1.0, 100).has_value());
  CHECK_FALSE(cell::find_beta(blocked, 5.0, 400).has_value());

  CHECK_THROWS_AS(cell::find_beta(sweeping, 0.0, 10), InvalidArgumentError);
  CHECK_THROWS_AS(cell::find_beta(sweeping, 1.0, 0), InvalidArgumentError);
}

TEST_CASE("process adapter stays on the half line") {
  const cell::CellCycleProcess proc{CellCycleModel(1.0, 0.5, 0.0)};
  RandomStream rng(71);
  double x = 0.75;
  for (int i = 0; i < 200; ++i) {
    x = proc.advance(x, rng);
    CHECK(x >= 0.5);
    CHECK(proc.membership_error(x) == 0.0);
  }
  CHECK(proc.membership_error(0.4) == doctest::Approx(0.1));
}

TEST_CASE("duality identity on the half line") {
  const CellCycleModel m(1.0, 0.5, 0.0);
  const double alpha = m.alpha();
  const double sigma = m.sigma();
  // rho is the Pareto density with scale sigma and shape alpha.
  const MonteCarloEstimate res = cell::duality_residual(
      m,
      [alpha, sigma](double y) {
        return (alpha / sigma) * std::pow(y / sigma, -1.0 - alpha);
      },
      [alpha, sigma](RandomStream& r) {
        return sigma * std::pow(r.uniform_pos(), -1.0 / alpha);
      },
      sigma, 1.0, 100000, RandomStream(73));
  CHECK(std::abs(res.value) < 3.0 * res.std_error + 1e-8);
  CHECK_THROWS_AS(
      cell::duality_residual(
          m, [](double) { return 1.0; }, [](RandomStream&) { return 1.0; }, 0.1,
          1.0, 100, RandomStream(1)),
      InvalidArgumentError);
}
