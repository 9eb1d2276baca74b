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

#include "sweepcert/errors.hpp"
#include "sweepcert/quadrature.hpp"

using sweepcert::integrate_1d;

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

TEST_CASE("polynomials and elementary integrals") {
  CHECK(integrate_1d([](double x) { return x * x; }, 0.0, 1.0, 1e-12) ==
        doctest::Approx(1.0 / 3.0).epsilon(1e-13));
  CHECK(integrate_1d([](double x) { return std::sin(x); }, 0.0, M_PI, 1e-12) ==
        doctest::Approx(2.0).epsilon(1e-13));
  CHECK(integrate_1d([](double x) { return std::exp(x); }, -1.0, 2.0, 1e-12) ==
        doctest::Approx(std::exp(2.0) - std::exp(-1.0)).epsilon(1e-13));
  // Degenerate interval integrates to zero without evaluating anything.
  CHECK(integrate_1d([](double) { return 1e300; }, 2.0, 2.0, 1e-12) == 0.0);
}

TEST_CASE("power integrand used by the half-line densities") {
  // int_{1/2}^{2} x^{-0.9} dx = (2^{0.1} - 0.5^{0.1}) / 0.1
  const double expected = 1.3874047099948575;
  CHECK(integrate_1d([](double x) { return std::pow(x, -0.9); }, 0.5, 2.0,
                     1e-12) == doctest::Approx(expected).epsilon(1e-12));
}

TEST_CASE("infinite upper limit") {
  CHECK(integrate_1d([](double x) { return std::exp(-x); }, 0.0, kInf, 1e-10) ==
        doctest::Approx(1.0).epsilon(1e-10));
  CHECK(integrate_1d([](double x) { return 1.0 / (x * x); }, 1.0, kInf,
                     1e-10) == doctest::Approx(1.0).epsilon(1e-10));
  // Pareto density mass, the exact shape appearing in the size kernel.
  const double alpha = 1.7;
  const double scale = 0.3;
  CHECK(integrate_1d(
            [&](double x) {
              return (alpha / scale) * std::pow(x / scale, -1.0 - alpha);
            },
            scale, kInf, 1e-11) == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("adaptivity concentrates on sharp features") {
  // Narrow Lorentzian peak at the origin.
  const double a = 1e-3;
  const double expected = (2.0 / a) * std::atan(1.0 / a);
  CHECK(integrate_1d([&](double x) { return 1.0 / (a * a + x * x); }, -1.0, 1.0,
                     1e-6) == doctest::Approx(expected).epsilon(1e-9));
  // Many oscillations cancel to a known value.
  CHECK(integrate_1d([](double x) { return std::sin(x); }, 0.0, 20.0 * M_PI,
                     1e-10) == doctest::Approx(0.0).epsilon(1e-9));
}

TEST_CASE("discontinuous integrand still converges") {
  const double val = integrate_1d(
      [](double x) { return x < 0.3 ? 1.0 : 2.0; }, 0.0, 1.0, 1e-9, 100000);
  CHECK(val == doctest::Approx(1.7).epsilon(1e-8));
}

TEST_CASE("argument validation") {
  CHECK_THROWS_AS(integrate_1d([](double) { return 0.0; }, 1.0, 0.0, 1e-9),
                  sweepcert::InvalidArgumentError);
  CHECK_THROWS_AS(integrate_1d([](double) { return 0.0; }, 0.0, 1.0, 0.0),
                  sweepcert::InvalidArgumentError);
  CHECK_THROWS_AS(
      integrate_1d([](double) { return 0.0; },
                   std::numeric_limits<double>::quiet_NaN(), 1.0, 1e-9),
      sweepcert::InvalidArgumentError);
}

TEST_CASE("budget exhaustion reports the best estimate") {
  // Integrable endpoint singularity with an impossible tolerance and a tiny
  // segment budget: must throw, and the carried estimate must still be close.
  try {
    integrate_1d([](double x) { return 1.0 / std::sqrt(x); }, 0.0, 1.0, 1e-14,
                 8);
    FAIL("expected QuadratureError");
  } catch (const sweepcert::QuadratureError& e) {
    CHECK(e.best_estimate() == doctest::Approx(2.0).epsilon(0.05));
    CHECK(e.error_estimate() > 1e-14);
  }
}

TEST_CASE("tolerance is an absolute bound on smooth problems") {
  const double loose = integrate_1d(
      [](double x) { return std::cos(3.0 * x) * std::exp(-x); }, 0.0, 5.0, 1e-4);
  const double tight = integrate_1d(
      [](double x) { return std::cos(3.0 * x) * std::exp(-x); }, 0.0, 5.0, 1e-12);
  CHECK(std::abs(loose - tight) < 1e-4);
}
