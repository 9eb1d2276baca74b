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

#include "sweepcert/sphere_sampling.hpp"

#include <complex>

#include "sweepcert/errors.hpp"

namespace sweepcert {

QuantumState sample_uniform_sphere(int dim_complex, RandomStream& rng) {
  if (dim_complex < 1) {
    throw InvalidArgumentError("sample_uniform_sphere: dim_complex must be >= 1");
  }
  Eigen::VectorXcd v(dim_complex);
  double norm2 = 0.0;
  do {
    for (int i = 0; i < dim_complex; ++i) {
      v(i) = std::complex<double>(rng.normal(), rng.normal());
    }
    norm2 = v.squaredNorm();
  } while (!(norm2 > 1e-24));  // astronomically unlikely, but keeps normalize exact
  return QuantumState(v / std::sqrt(norm2));
}

Eigen::VectorXd sample_uniform_real_sphere(int dim, RandomStream& rng) {
  if (dim < 1) {
    throw InvalidArgumentError("sample_uniform_real_sphere: dim must be >= 1");
  }
  Eigen::VectorXd x(dim);
  double norm2 = 0.0;
  do {
    for (int i = 0; i < dim; ++i) x(i) = rng.normal();
    norm2 = x.squaredNorm();
  } while (!(norm2 > 1e-24));
  return x / std::sqrt(norm2);
}

}  // namespace sweepcert
