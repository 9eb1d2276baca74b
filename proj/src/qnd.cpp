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

#include "sweepcert/qnd.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <string>
#include <utility>

#include "sweepcert/errors.hpp"

namespace sweepcert::qnd {

Eigen::MatrixXd realify(const Eigen::MatrixXcd& m) {
  const int n = static_cast<int>(m.rows());
  Eigen::MatrixXd r(2 * n, 2 * n);
  r.topLeftCorner(n, n) = m.real();
  r.topRightCorner(n, n) = -m.imag();
  r.bottomLeftCorner(n, n) = m.imag();
  r.bottomRightCorner(n, n) = m.real();
  return r;
}

QuantumState apply_measurement(const Eigen::MatrixXcd& m, const QuantumState& phi) {
  if (m.rows() != m.cols() || m.rows() != phi.dim()) {
    throw InvalidArgumentError("apply_measurement: dimension mismatch");
  }
  const Eigen::VectorXcd image = m * phi.vec();
  const double norm = image.norm();
  if (norm < 1e-14) {
    throw NearSingularError("apply_measurement: matrix annihilates the state");
  }
  return QuantumState(image / norm);
}

QuantumState inverse_measurement(const Eigen::MatrixXcd& m, const QuantumState& phi) {
  const Eigen::PartialPivLU<Eigen::MatrixXcd> lu(m);
  const std::complex<double> det = lu.determinant();
  if (std::abs(det) <= 1e-12) {
    throw InvalidArgumentError("inverse_measurement: matrix is numerically singular");
  }
  const Eigen::VectorXcd pre = lu.solve(phi.vec());
  const double norm = pre.norm();
  if (norm < 1e-14) {
    throw NearSingularError("inverse_measurement: inverse annihilates the state");
  }
  return QuantumState(pre / norm);
}

double jacobian_det_real(const Eigen::MatrixXd& m, const Eigen::VectorXd& phi) {
  const int n = static_cast<int>(m.rows());
  if (m.cols() != n || phi.size() != n) {
    throw InvalidArgumentError("jacobian_det_real: dimension mismatch");
  }
  const double abs_det = std::abs(m.determinant());
  if (abs_det <= 1e-12) {
    throw InvalidArgumentError("jacobian_det_real: matrix is numerically singular");
  }
  const double norm = (m * phi).norm();
  return abs_det / std::pow(norm, n);
}

double jacobian_det_complex(const Eigen::MatrixXcd& m, const QuantumState& phi) {
  const int n = phi.dim();
  if (m.rows() != n || m.cols() != n) {
    throw InvalidArgumentError("jacobian_det_complex: dimension mismatch");
  }
  const double abs_det = std::abs(m.determinant());
  if (abs_det <= 1e-12) {
    throw InvalidArgumentError("jacobian_det_complex: matrix is numerically singular");
  }
  const double norm2 = (m * phi.vec()).squaredNorm();
  return abs_det * abs_det / std::pow(norm2, n);
}

EnsembleValidation MeasurementEnsemble::inspect(
    const std::vector<Eigen::MatrixXcd>& matrices, bool diagonal_kind) {
  EnsembleValidation v;
  if (matrices.empty()) return v;
  const int n = static_cast<int>(matrices[0].rows());

  Eigen::MatrixXcd sum = Eigen::MatrixXcd::Zero(n, n);
  v.min_abs_det = std::numeric_limits<double>::infinity();
  v.all_hermitian = true;
  v.all_positive_definite = true;
  for (const Eigen::MatrixXcd& m : matrices) {
    if (m.rows() != n || m.cols() != n) {
      v.min_abs_det = 0.0;
      return v;
    }
    sum += m.adjoint() * m;
    v.min_abs_det = std::min(v.min_abs_det, std::abs(m.determinant()));
    const bool hermitian = (m - m.adjoint()).cwiseAbs().maxCoeff() <= 1e-12;
    v.all_hermitian = v.all_hermitian && hermitian;
    if (hermitian) {
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(m);
      v.all_positive_definite =
          v.all_positive_definite && eig.eigenvalues().minCoeff() > 0.0;
    } else {
      v.all_positive_definite = false;
    }
  }
  sum -= Eigen::MatrixXcd::Identity(n, n);
  v.completeness_residual = sum.cwiseAbs().maxCoeff();
  v.completeness_ok = v.completeness_residual < 1e-12;
  v.invertibility_ok = v.min_abs_det > 1e-12;

  if (diagonal_kind) {
    for (const Eigen::MatrixXcd& m : matrices) {
      for (int i = 0; i < n; ++i) {
        const double entry = m(i, i).real();
        if (!(entry > 0.0 && entry < 1.0)) v.diagonal_entries_ok = false;
        for (int j = i + 1; j < n; ++j) {
          if (m(i, i) == m(j, j)) v.diagonal_distinct_ok = false;
        }
      }
    }
  }
  return v;
}

MeasurementEnsemble::MeasurementEnsemble(Kind kind,
                                         std::vector<Eigen::MatrixXcd> matrices,
                                         std::vector<std::vector<double>> entries)
    : kind_(kind), matrices_(std::move(matrices)), entries_(std::move(entries)) {
  validation_ = inspect(matrices_, kind_ == Kind::diagonal);
  if (!validation_.completeness_ok) {
    throw InvalidArgumentError(
        "MeasurementEnsemble: completeness residual " +
        std::to_string(validation_.completeness_residual) + " exceeds 1e-12");
  }
  if (!validation_.invertibility_ok) {
    throw InvalidArgumentError("MeasurementEnsemble: a branch matrix is singular");
  }
  if (!validation_.diagonal_entries_ok) {
    throw InvalidArgumentError(
        "MeasurementEnsemble: diagonal entries must lie in (0, 1)");
  }
  if (!validation_.diagonal_distinct_ok) {
    throw InvalidArgumentError(
        "MeasurementEnsemble: diagonal entries within a branch must be distinct");
  }
  inverses_.reserve(matrices_.size());
  abs_dets_.reserve(matrices_.size());
  for (const Eigen::MatrixXcd& m : matrices_) {
    inverses_.push_back(m.inverse());
    abs_dets_.push_back(std::abs(m.determinant()));
  }
}

MeasurementEnsemble MeasurementEnsemble::diagonal(
    const std::vector<std::vector<double>>& entries) {
  if (entries.empty() || entries[0].empty()) {
    throw InvalidArgumentError("MeasurementEnsemble::diagonal: empty entry table");
  }
  const std::size_t n = entries[0].size();
  std::vector<Eigen::MatrixXcd> matrices;
  matrices.reserve(entries.size());
  for (const std::vector<double>& row : entries) {
    if (row.size() != n) {
      throw InvalidArgumentError("MeasurementEnsemble::diagonal: ragged entry table");
    }
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(static_cast<int>(n), static_cast<int>(n));
    for (std::size_t i = 0; i < n; ++i) m(static_cast<int>(i), static_cast<int>(i)) = row[i];
    matrices.push_back(std::move(m));
  }
  return MeasurementEnsemble(Kind::diagonal, std::move(matrices), entries);
}

MeasurementEnsemble MeasurementEnsemble::general(
    const std::vector<Eigen::MatrixXcd>& matrices) {
  if (matrices.empty() || matrices[0].rows() == 0) {
    throw InvalidArgumentError("MeasurementEnsemble::general: no matrices");
  }
  return MeasurementEnsemble(Kind::general, matrices, {});
}

double MeasurementEnsemble::diagonal_entry(int k, int i) const {
  if (kind_ != Kind::diagonal) {
    throw UnsupportedError("diagonal_entry: ensemble is not diagonal");
  }
  return entries_[static_cast<std::size_t>(k)][static_cast<std::size_t>(i)];
}

Eigen::VectorXd outcome_probabilities(const MeasurementEnsemble& ensemble,
                                      const QuantumState& phi) {
  Eigen::VectorXd p(ensemble.branch_count());
  for (int k = 0; k < ensemble.branch_count(); ++k) {
    p(k) = (ensemble.matrix(k) * phi.vec()).squaredNorm();
  }
  return p;
}

double perron_qnd(const MeasurementEnsemble& ensemble,
                  const std::function<double(const QuantumState&)>& rho,
                  const QuantumState& phi) {
  const int n = ensemble.dim();
  if (phi.dim() != n) throw InvalidArgumentError("perron_qnd: dimension mismatch");
  double sum = 0.0;
  for (int k = 0; k < ensemble.branch_count(); ++k) {
    const Eigen::VectorXcd pre = ensemble.inverse(k) * phi.vec();
    const double norm2 = pre.squaredNorm();
    const QuantumState pre_state = QuantumState::normalized(pre);
    const double r = rho(pre_state);
    if (!std::isfinite(r)) {
      throw SingularEvaluationError(
          "perron_qnd: density non-finite at preimage of branch " +
              std::to_string(k),
          k);
    }
    const double inv_det = 1.0 / ensemble.abs_det(k);
    sum += inv_det * inv_det / std::pow(norm2, n + 1) * r;
  }
  return sum;
}

double subinvariance_ratio(const MeasurementEnsemble& ensemble,
                           const QuantumState& phi) {
  if (ensemble.kind() != MeasurementEnsemble::Kind::diagonal) {
    throw UnsupportedError(
        "subinvariance_ratio: factorized form requires a diagonal ensemble");
  }
  const int n = ensemble.dim();
  if (phi.dim() != n) {
    throw InvalidArgumentError("subinvariance_ratio: dimension mismatch");
  }
  double ratio = 0.0;
  for (int k = 0; k < ensemble.branch_count(); ++k) {
    double norm2 = 0.0;  // ||M_k^{-1} phi||^2 = sum_i |phi_i|^2 / m_k(i)^2
    for (int i = 0; i < n; ++i) {
      const double entry = ensemble.diagonal_entry(k, i);
      norm2 += std::norm(phi[i]) / (entry * entry);
    }
    ratio += 1.0 / norm2;
  }
  return ratio;
}

FockLyapunovDensity::FockLyapunovDensity(int dim) : dim_(dim) {
  if (dim < 1) throw InvalidArgumentError("FockLyapunovDensity: dim must be >= 1");
}

double FockLyapunovDensity::operator()(const QuantumState& phi) const {
  if (phi.dim() != dim_) {
    throw InvalidArgumentError("FockLyapunovDensity: dimension mismatch");
  }
  double prod = 1.0;
  for (int i = 0; i < dim_; ++i) {
    const double a2 = std::norm(phi[i]);
    if (a2 < 1e-28) return std::numeric_limits<double>::infinity();
    prod *= a2;
  }
  return 1.0 / prod;
}

bool FockLyapunovDensity::is_singular(const QuantumState& phi) const {
  return phi.min_abs_component() < 1e-14;
}

double FockLyapunovDensity::singular_distance(const QuantumState& phi) const {
  return phi.min_abs_component();
}

IfsModel<QuantumState> to_ifs_model(const MeasurementEnsemble& ensemble) {
  IfsModel<QuantumState> model;
  model.branch_count = ensemble.branch_count();
  model.space = {SpaceKind::complex_sphere, ensemble.dim(), 0.0};
  // The ensemble is copied into each closure so the model owns its data.
  model.forward_map = [ensemble](int k, const QuantumState& x) {
    return apply_measurement(ensemble.matrix(k), x);
  };
  model.inverse_map = [ensemble](int k, const QuantumState& x) {
    return apply_measurement(ensemble.inverse(k), x);
  };
  model.inv_jacobian_det = [ensemble](int k, const QuantumState& x) {
    return jacobian_det_complex(ensemble.inverse(k), x);
  };
  model.weight = [ensemble](int k, const QuantumState& x) {
    return (ensemble.matrix(k) * x.vec()).squaredNorm();
  };
  model.membership_error = [](const QuantumState& x) {
    return std::abs(x.vec().norm() - 1.0);
  };
  model.project = [](const QuantumState& x) {
    return QuantumState::normalized(x.vec());
  };
  return model;
}

}  // namespace sweepcert::qnd
