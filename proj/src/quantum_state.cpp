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

#include "sweepcert/quantum_state.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "sweepcert/errors.hpp"

namespace sweepcert {

QuantumState::QuantumState(Eigen::VectorXcd components) : v_(std::move(components)) {
  if (v_.size() == 0) {
    throw InvalidArgumentError("QuantumState: empty component vector");
  }
  const double norm = v_.norm();
  if (!(std::abs(norm - 1.0) <= 1e-12)) {
    throw InvalidArgumentError("QuantumState: norm deviates from 1 by more than 1e-12");
  }
}

QuantumState QuantumState::normalized(const Eigen::VectorXcd& components) {
  const double norm = components.norm();
  if (!(norm > 1e-300)) {
    throw InvalidArgumentError("QuantumState::normalized: zero vector");
  }
  return QuantumState(components / norm);
}

Eigen::VectorXd QuantumState::realified() const {
  const int n = dim();
  Eigen::VectorXd x(2 * n);
  x.head(n) = v_.real();
  x.tail(n) = v_.imag();
  return x;
}

QuantumState QuantumState::from_realified(const Eigen::VectorXd& x) {
  if (x.size() % 2 != 0 || x.size() == 0) {
    throw InvalidArgumentError("QuantumState::from_realified: length must be even and positive");
  }
  const int n = static_cast<int>(x.size()) / 2;
  Eigen::VectorXcd v(n);
  for (int i = 0; i < n; ++i) v(i) = std::complex<double>(x(i), x(n + i));
  return QuantumState(std::move(v));
}

double QuantumState::min_abs_component() const {
  double m = std::abs(v_(0));
  for (int i = 1; i < v_.size(); ++i) m = std::min(m, std::abs(v_(i)));
  return m;
}

double QuantumState::max_abs2_component() const {
  double m = std::norm(v_(0));
  for (int i = 1; i < v_.size(); ++i) m = std::max(m, std::norm(v_(i)));
  return m;
}

}  // namespace sweepcert
