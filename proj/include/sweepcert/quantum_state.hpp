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

#include <Eigen/Dense>
#include <complex>

namespace sweepcert {

// Unit-norm complex N-vector: a point of the complex unit sphere.
class QuantumState {
 public:
  // Empty placeholder (dim 0) so states can live in pre-sized containers;
  // every validated constructor below enforces the unit-norm invariant.
  QuantumState() = default;

  // Validates |norm - 1| <= 1e-12; throws InvalidArgumentError otherwise.
  explicit QuantumState(Eigen::VectorXcd components);

  // Rescales to unit norm first (throws on the zero vector).
  static QuantumState normalized(const Eigen::VectorXcd& components);

  int dim() const { return static_cast<int>(v_.size()); }
  const Eigen::VectorXcd& vec() const { return v_; }
  std::complex<double> operator[](int i) const { return v_(i); }

  // Real 2N-vector [Re phi; Im phi]; the standard identification of the
  // complex sphere with S^{2N-1}.
  Eigen::VectorXd realified() const;
  static QuantumState from_realified(const Eigen::VectorXd& x);

  // min_i |phi_i|; distance proxy to the coordinate-zero set.
  double min_abs_component() const;
  double max_abs2_component() const;

 private:
  Eigen::VectorXcd v_;
};

}  // namespace sweepcert
