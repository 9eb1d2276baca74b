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

#include "sweepcert/fd_jacobian.hpp"

#include <cmath>

#include "sweepcert/errors.hpp"

namespace sweepcert {

namespace {

// Orthonormal basis of the tangent space at unit vector p: Gram-Schmidt of
// the coordinate axes, skipping the axis where |p_i| is largest (ties break
// to the lowest index).  That axis has a nonzero projection on p, so the
// remaining d-1 axes always span the tangent space.
Eigen::MatrixXd tangent_basis(const Eigen::VectorXd& p) {
  const int d = static_cast<int>(p.size());
  int skip = 0;
  for (int i = 1; i < d; ++i) {
    if (std::abs(p(i)) > std::abs(p(skip))) skip = i;
  }
  Eigen::MatrixXd basis(d, d - 1);
  int col = 0;
  for (int j = 0; j < d; ++j) {
    if (j == skip) continue;
    Eigen::VectorXd v = Eigen::VectorXd::Zero(d);
    v(j) = 1.0;
    v -= v.dot(p) * p;
    for (int c = 0; c < col; ++c) v -= v.dot(basis.col(c)) * basis.col(c);
    basis.col(col) = v / v.norm();
    ++col;
  }
  return basis;
}

// One central-difference pass at step h: columns are the images of the
// tangent frame, projected onto the tangent space at the image point.
double det_at_step(const std::function<Eigen::VectorXd(const Eigen::VectorXd&)>& map,
                   const Eigen::VectorXd& p, const Eigen::MatrixXd& basis,
                   const Eigen::MatrixXd& image_basis, double h) {
  const int m = static_cast<int>(basis.cols());
  Eigen::MatrixXd jac(m, m);
  for (int j = 0; j < m; ++j) {
    Eigen::VectorXd plus = p + h * basis.col(j);
    plus /= plus.norm();
    Eigen::VectorXd minus = p - h * basis.col(j);
    minus /= minus.norm();
    const Eigen::VectorXd diff = (map(plus) - map(minus)) / (2.0 * h);
    jac.col(j) = image_basis.transpose() * diff;
  }
  return std::abs(jac.determinant());
}

}  // namespace

FdJacobianResult fd_jacobian_det_on_sphere(
    const std::function<Eigen::VectorXd(const Eigen::VectorXd&)>& map,
    const Eigen::VectorXd& point, double step) {
  if (point.size() < 2) {
    throw InvalidArgumentError("fd_jacobian_det_on_sphere: need dimension >= 2");
  }
  if (!(step > 0.0)) {
    throw InvalidArgumentError("fd_jacobian_det_on_sphere: step must be positive");
  }
  if (std::abs(point.norm() - 1.0) > 1e-8) {
    throw InvalidArgumentError("fd_jacobian_det_on_sphere: point must be unit norm");
  }

  const Eigen::MatrixXd basis = tangent_basis(point);
  const Eigen::VectorXd image = map(point);
  if (std::abs(image.norm() - 1.0) > 1e-6) {
    throw InvalidArgumentError(
        "fd_jacobian_det_on_sphere: map does not preserve the sphere");
  }
  const Eigen::MatrixXd image_basis = tangent_basis(image / image.norm());

  const double d1 = det_at_step(map, point, basis, image_basis, step);
  const double d2 = det_at_step(map, point, basis, image_basis, 0.5 * step);

  FdJacobianResult result;
  // Central differences are O(h^2); one halving step cancels the leading term.
  result.value = (4.0 * d2 - d1) / 3.0;
  const double disagreement = std::abs(d2 - d1);
  result.error_estimate = disagreement / 3.0 + 1e-14 * std::abs(result.value);
  result.step_warning =
      disagreement > 1e-3 * std::max(std::abs(d2), 1e-12) + 1e-10;
  return result;
}

}  // namespace sweepcert
