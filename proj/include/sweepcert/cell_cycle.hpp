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
#include <optional>

#include "sweepcert/monte_carlo.hpp"
#include "sweepcert/random_stream.hpp"

namespace sweepcert::cell {

// Cell-size process on [sigma, inf): a mother of size y produces a daughter
// whose size is Pareto-distributed with scale sigma*max(1, y) and shape alpha.
//
// beta is the candidate certificate exponent for the power density x^{-1+beta}.
// sigma must lie in (0, 1): the kernel's sub-unit branch and the closed-form
// image of the power density are both derived under that assumption.
class CellCycleModel {
 public:
  CellCycleModel(double alpha, double sigma, double beta);

  double alpha() const { return alpha_; }
  double sigma() const { return sigma_; }
  double beta() const { return beta_; }

  // alpha * ln(sigma) >= -1: the regime in which no integrable invariant
  // density exists and sweeping to infinity is expected.
  bool sweeping_regime() const;

 private:
  double alpha_;
  double sigma_;
  double beta_;
};

// Daughter-size density K(x, y) in x for a mother of size y:
//   sigma <= y < 1:    (alpha/sigma) (x/sigma)^{-1-alpha}
//   1 <= y < x/sigma:  (alpha/sigma) (x/sigma)^{-1-alpha} y^alpha
//   y >= x/sigma:      0
// Integrates to 1 in x over [sigma*max(1,y), inf) for every y.
double kernel_eval(const CellCycleModel& model, double x, double y);

// Inverse-CDF transform: x = sigma * max(1, y) * u^{-1/alpha}, u in (0, 1].
double daughter_size_from_uniform(const CellCycleModel& model, double y, double u);

double sample_daughter_size(const CellCycleModel& model, double y, RandomStream& rng);

// P(y, [a, b)) in closed form from the Pareto distribution function.
double interval_transition_probability(const CellCycleModel& model, double y,
                                       double a, double b);

// Image of the power density x^{-1+beta} under the transfer operator:
//   A x^{-1+beta} + B x^{-1-alpha}
// with A = alpha / ((alpha+beta) sigma^beta) and
//      B = alpha (alpha - sigma^beta (alpha+beta)) / (beta (alpha+beta) sigma^{-alpha}).
// Requires beta > 0 (B divides by beta); throws InvalidArgumentError at beta = 0.
double perron_power_closed_form(const CellCycleModel& model, double x);

// Independent oracle: quadrature of int K(x, y) y^{-1+beta} dy over
// [sigma, x/sigma] (the kernel vanishes beyond), split at the y = 1 kink.
double perron_power_quadrature(const CellCycleModel& model, double x, double tol);

// Generic transfer-operator evaluation (P rho)(x) by quadrature.
double perron_density(const CellCycleModel& model,
                      const std::function<double(double)>& rho, double x,
                      double tol);

// Certificate margin f(beta) = alpha - sigma^beta (alpha + beta).
// f(0) = 0 exactly; f(beta) < 0 certifies proper subinvariance of x^{-1+beta};
// f'(0) = -alpha ln(sigma) - 1.
double certificate_margin(const CellCycleModel& model, double beta);

// Smallest beta on a log-spaced grid over [beta_max/grid, beta_max] with
// f(beta) < -1e-9, refined by a bisection-style minimization of f over the
// neighboring grid interval.  Empty when no grid point qualifies.
std::optional<double> find_beta(const CellCycleModel& model, double beta_max,
                                int grid);

// Process-interface adapter for ensemble simulation.
struct CellCycleProcess {
  CellCycleModel model;

  double advance(double x, RandomStream& rng) const {
    return sample_daughter_size(model, x, rng);
  }
  double membership_error(double x) const {
    return x >= model.sigma() ? 0.0 : model.sigma() - x;
  }
  double project(double x) const { return x; }
};

// Residual of the duality identity on the half line for the set A = [a, b):
// quadrature of (P rho) over [a, b) against the sampled expectation of
// P(y, [a, b)) under y ~ rho.  The quadrature side is treated as exact, so
// the combined error is the sampling side's standard error.
MonteCarloEstimate duality_residual(
    const CellCycleModel& model, const std::function<double(double)>& rho,
    const std::function<double(RandomStream&)>& rho_sampler, double a, double b,
    long long n_mc, RandomStream rng, double quad_tol = 1e-9);

}  // namespace sweepcert::cell
