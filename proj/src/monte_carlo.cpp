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

#include "sweepcert/monte_carlo.hpp"

#include <cmath>

#include "sweepcert/errors.hpp"
#include "sweepcert/sphere_sampling.hpp"

namespace sweepcert {

double sphere_volume(int dim_complex) {
  if (dim_complex < 1) {
    throw InvalidArgumentError("sphere_volume: dim_complex must be >= 1");
  }
  const double kPi = 3.14159265358979323846;
  double factorial = 1.0;
  for (int i = 2; i < dim_complex; ++i) factorial *= i;
  return 2.0 * std::pow(kPi, dim_complex) / factorial;
}

MonteCarloEstimate mc_integral_on_sphere(
    const std::function<double(const QuantumState&)>& g, int dim_complex,
    long long n, RandomStream rng) {
  if (n < 1) {
    throw InvalidArgumentError("mc_integral_on_sphere: n must be >= 1");
  }
  const double vol = sphere_volume(dim_complex);

  // Welford running mean/variance over the finite evaluations.
  long long n_finite = 0;
  long long n_rejected = 0;
  double mean = 0.0;
  double m2 = 0.0;
  for (long long i = 0; i < n; ++i) {
    const QuantumState phi = sample_uniform_sphere(dim_complex, rng);
    const double gi = g(phi);
    if (!std::isfinite(gi)) {
      ++n_rejected;
      continue;
    }
    ++n_finite;
    const double delta = gi - mean;
    mean += delta / static_cast<double>(n_finite);
    m2 += delta * (gi - mean);
  }
  if (n_rejected * 10000 > n) {
    throw SingularityExposureError(
        "mc_integral_on_sphere: more than 0.01% non-finite evaluations",
        n_rejected, n);
  }
  if (n_finite == 0) {
    throw SingularityExposureError(
        "mc_integral_on_sphere: no finite evaluations", n_rejected, n);
  }
  double std_error = 0.0;
  if (n_finite > 1) {
    const double variance = m2 / static_cast<double>(n_finite - 1);
    std_error = vol * std::sqrt(variance / static_cast<double>(n_finite));
  }
  return {vol * mean, std_error, n_finite};
}

}  // namespace sweepcert
