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

#include "sweepcert/cell_cycle.hpp"

#include <algorithm>
#include <cmath>

#include "sweepcert/errors.hpp"
#include "sweepcert/quadrature.hpp"

namespace sweepcert::cell {

CellCycleModel::CellCycleModel(double alpha, double sigma, double beta)
    : alpha_(alpha), sigma_(sigma), beta_(beta) {
  if (!(alpha > 0.0) || !std::isfinite(alpha)) {
    throw InvalidArgumentError("CellCycleModel: alpha must be positive");
  }
  if (!(sigma > 0.0) || !(sigma < 1.0)) {
    throw InvalidArgumentError("CellCycleModel: sigma must lie in (0, 1)");
  }
  if (!(beta >= 0.0) || !std::isfinite(beta)) {
    throw InvalidArgumentError("CellCycleModel: beta must be non-negative");
  }
}

bool CellCycleModel::sweeping_regime() const {
  return alpha_ * std::log(sigma_) >= -1.0;
}

double kernel_eval(const CellCycleModel& model, double x, double y) {
  const double sigma = model.sigma();
  const double alpha = model.alpha();
  if (!(x >= sigma) || !(y >= sigma)) {
    throw InvalidArgumentError("kernel_eval: arguments must be >= sigma");
  }
  if (y >= x / sigma) return 0.0;
  const double base = (alpha / sigma) * std::pow(x / sigma, -1.0 - alpha);
  if (y < 1.0) return base;
  return base * std::pow(y, alpha);
}

double daughter_size_from_uniform(const CellCycleModel& model, double y, double u) {
  if (!(y >= model.sigma())) {
    throw InvalidArgumentError("daughter_size_from_uniform: y must be >= sigma");
  }
  if (!(u > 0.0) || !(u <= 1.0)) {
    throw InvalidArgumentError("daughter_size_from_uniform: u must lie in (0, 1]");
  }
  return model.sigma() * std::max(1.0, y) * std::pow(u, -1.0 / model.alpha());
}

double sample_daughter_size(const CellCycleModel& model, double y,
                            RandomStream& rng) {
  return daughter_size_from_uniform(model, y, rng.uniform_pos());
}

double interval_transition_probability(const CellCycleModel& model, double y,
                                       double a, double b) {
  if (!(y >= model.sigma())) {
    throw InvalidArgumentError("interval_transition_probability: y must be >= sigma");
  }
  if (!(a <= b)) {
    throw InvalidArgumentError("interval_transition_probability: need a <= b");
  }
  const double scale = model.sigma() * std::max(1.0, y);
  // Pareto distribution function F(t) = 1 - (scale/t)^alpha for t >= scale.
  auto cdf = [&](double t) {
    if (t <= scale) return 0.0;
    if (std::isinf(t)) return 1.0;
    return 1.0 - std::pow(scale / t, model.alpha());
  };
  return std::clamp(cdf(b) - cdf(a), 0.0, 1.0);
}

double perron_power_closed_form(const CellCycleModel& model, double x) {
  const double alpha = model.alpha();
  const double sigma = model.sigma();
  const double beta = model.beta();
  if (!(beta > 0.0)) {
    throw InvalidArgumentError(
        "perron_power_closed_form: beta = 0 makes the second coefficient degenerate");
  }
  if (!(x >= sigma)) {
    throw InvalidArgumentError("perron_power_closed_form: x must be >= sigma");
  }
  const double sb = std::pow(sigma, beta);
  const double a_coeff = alpha / ((alpha + beta) * sb);
  const double b_coeff = alpha * (alpha - sb * (alpha + beta)) /
                         (beta * (alpha + beta) * std::pow(sigma, -alpha));
  return a_coeff * std::pow(x, -1.0 + beta) + b_coeff * std::pow(x, -1.0 - alpha);
}

double perron_density(const CellCycleModel& model,
                      const std::function<double(double)>& rho, double x,
                      double tol) {
  const double sigma = model.sigma();
  if (!(x >= sigma)) {
    throw InvalidArgumentError("perron_density: x must be >= sigma");
  }
  if (!(tol > 0.0)) {
    throw InvalidArgumentError("perron_density: tol must be positive");
  }
  const double upper = x / sigma;  // kernel vanishes for y >= x/sigma
  auto integrand = [&](double y) { return kernel_eval(model, x, y) * rho(y); };
  // Split at the y = 1 kink of the kernel.
  double value = 0.0;
  const double mid = std::min(1.0, upper);
  if (mid > sigma) value += integrate_1d(integrand, sigma, mid, 0.5 * tol);
  if (upper > 1.0) value += integrate_1d(integrand, 1.0, upper, 0.5 * tol);
  return value;
}

double perron_power_quadrature(const CellCycleModel& model, double x, double tol) {
  const double beta = model.beta();
  return perron_density(
      model, [beta](double y) { return std::pow(y, -1.0 + beta); }, x, tol);
}

double certificate_margin(const CellCycleModel& model, double beta) {
  if (!(beta >= 0.0)) {
    throw InvalidArgumentError("certificate_margin: beta must be >= 0");
  }
  const double alpha = model.alpha();
  return alpha - std::pow(model.sigma(), beta) * (alpha + beta);
}

std::optional<double> find_beta(const CellCycleModel& model, double beta_max,
                                int grid) {
  if (!(beta_max > 0.0)) {
    throw InvalidArgumentError("find_beta: beta_max must be positive");
  }
  if (grid < 1) throw InvalidArgumentError("find_beta: grid must be >= 1");

  const double lo = beta_max / grid;
  const double ratio = grid > 1
                           ? std::pow(beta_max / lo, 1.0 / (grid - 1))
                           : 2.0;
  constexpr double kThreshold = -1e-9;
  for (int i = 0; i < grid; ++i) {
    const double beta = lo * std::pow(ratio, i);
    if (certificate_margin(model, beta) < kThreshold) {
      // Refine: push toward the most negative margin within the neighboring
      // grid interval by interval thirds (a bisection-style minimization).
      double left = beta / ratio;
      double right = std::min(beta * ratio, beta_max);
      for (int iter = 0; iter < 200 && right - left > 1e-15; ++iter) {
        const double m1 = left + (right - left) / 3.0;
        const double m2 = right - (right - left) / 3.0;
        if (certificate_margin(model, m1) < certificate_margin(model, m2)) {
          right = m2;
        } else {
          left = m1;
        }
      }
      const double refined = 0.5 * (left + right);
      if (certificate_margin(model, refined) < kThreshold) return refined;
      return beta;  // the grid point itself is the certified fallback
    }
  }
  return std::nullopt;
}

MonteCarloEstimate duality_residual(
    const CellCycleModel& model, const std::function<double(double)>& rho,
    const std::function<double(RandomStream&)>& rho_sampler, double a, double b,
    long long n_mc, RandomStream rng, double quad_tol) {
  if (n_mc < 2) throw InvalidArgumentError("duality_residual: n_mc must be >= 2");
  if (!(a >= model.sigma()) || !(b > a)) {
    throw InvalidArgumentError("duality_residual: need sigma <= a < b");
  }
  // Left side: int_a^b (P rho)(x) dx by nested quadrature.
  const double lhs = integrate_1d(
      [&](double x) { return perron_density(model, rho, x, 0.01 * quad_tol); },
      a, b, quad_tol);

  // Right side: expectation of P(y, [a, b)) under y ~ rho.
  RandomStream rhs_rng = rng.substream(1);
  double mean = 0.0;
  double m2 = 0.0;
  for (long long i = 0; i < n_mc; ++i) {
    const double y = rho_sampler(rhs_rng);
    const double p = interval_transition_probability(model, y, a, b);
    const double delta = p - mean;
    mean += delta / static_cast<double>(i + 1);
    m2 += delta * (p - mean);
  }
  const double rhs_se =
      std::sqrt(m2 / static_cast<double>(n_mc - 1) / static_cast<double>(n_mc));
  return {lhs - mean, rhs_se, n_mc};
}

}  // namespace sweepcert::cell
