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
#include <functional>
#include <vector>

#include "sweepcert/markov.hpp"
#include "sweepcert/quantum_state.hpp"

namespace sweepcert::qnd {

// Real 2N x 2N block matrix [[Re M, -Im M], [Im M, Re M]]: the action of M on
// stacked [Re phi; Im phi] coordinates.
Eigen::MatrixXd realify(const Eigen::MatrixXcd& m);

// phi -> M phi / ||M phi||.  Guards ||M phi|| >= 1e-14 (impossible for an
// invertible M and a unit phi, but kept as a hard stop).
QuantumState apply_measurement(const Eigen::MatrixXcd& m, const QuantumState& phi);

// phi -> M^{-1} phi / ||M^{-1} phi||.
QuantumState inverse_measurement(const Eigen::MatrixXcd& m, const QuantumState& phi);

// |det| of the tangent-space differential of the normalized map x -> Mx/||Mx||
// on the real sphere S^{N-1}:  |det M| / ||M phi||^N.
double jacobian_det_real(const Eigen::MatrixXd& m, const Eigen::VectorXd& phi);

// Complex version on the sphere S^{2N-1}:  |det M|^2 / ||M phi||^{2N}.
// Equals jacobian_det_real of the realified matrix at the realified point.
double jacobian_det_complex(const Eigen::MatrixXcd& m, const QuantumState& phi);

// Numeric health report for a candidate measurement ensemble.  Hermiticity and
// positive definiteness are informational flags, never hard requirements:
// only invertibility and completeness enter the formulas.
struct EnsembleValidation {
  double completeness_residual = 0.0;  // max-norm of sum M_k* M_k - I
  double min_abs_det = 0.0;
  bool completeness_ok = false;        // residual < 1e-12
  bool invertibility_ok = false;       // every |det M_k| > 1e-12
  bool all_hermitian = false;
  bool all_positive_definite = false;
  bool diagonal_entries_ok = true;     // diagonal kind: entries in (0,1)
  bool diagonal_distinct_ok = true;    // diagonal kind: rows have distinct entries

  bool ok() const {
    return completeness_ok && invertibility_ok && diagonal_entries_ok &&
           diagonal_distinct_ok;
  }
};

// K invertible complex N x N matrices with sum M_k* M_k = I.
class MeasurementEnsemble {
 public:
  enum class Kind { diagonal, general };

  // Diagonal ensemble from the K x N table of positive entries m_k(i).
  // Requires entries in (0, 1), per-column completeness sum_k m_k(i)^2 = 1
  // within 1e-12, and per-row pairwise distinct entries.
  static MeasurementEnsemble diagonal(const std::vector<std::vector<double>>& entries);

  // General ensemble; requires completeness within 1e-12 and |det M_k| > 1e-12.
  static MeasurementEnsemble general(const std::vector<Eigen::MatrixXcd>& matrices);

  // Non-throwing health check used before construction (e.g. by the CLI
  // validation command, which must report rather than crash on bad input).
  static EnsembleValidation inspect(const std::vector<Eigen::MatrixXcd>& matrices,
                                    bool diagonal_kind = false);

  Kind kind() const { return kind_; }
  int branch_count() const { return static_cast<int>(matrices_.size()); }
  int dim() const { return static_cast<int>(matrices_[0].rows()); }
  const Eigen::MatrixXcd& matrix(int k) const { return matrices_[static_cast<std::size_t>(k)]; }
  const Eigen::MatrixXcd& inverse(int k) const { return inverses_[static_cast<std::size_t>(k)]; }
  double abs_det(int k) const { return abs_dets_[static_cast<std::size_t>(k)]; }
  double diagonal_entry(int k, int i) const;
  const EnsembleValidation& validation() const { return validation_; }

 private:
  MeasurementEnsemble(Kind kind, std::vector<Eigen::MatrixXcd> matrices,
                      std::vector<std::vector<double>> entries);

  Kind kind_;
  std::vector<Eigen::MatrixXcd> matrices_;
  std::vector<Eigen::MatrixXcd> inverses_;
  std::vector<double> abs_dets_;
  std::vector<std::vector<double>> entries_;  // diagonal kind only
  EnsembleValidation validation_;
};

// p_k(phi) = ||M_k phi||^2; sums to 1 by completeness.
Eigen::VectorXd outcome_probabilities(const MeasurementEnsemble& ensemble,
                                      const QuantumState& phi);

// Transfer operator in closed form:
// sum_k |det M_k^{-1}|^2 / ||M_k^{-1} phi||^{2N+2} * rho(M_k^{-1}phi / ||M_k^{-1}phi||).
double perron_qnd(const MeasurementEnsemble& ensemble,
                  const std::function<double(const QuantumState&)>& rho,
                  const QuantumState& phi);

// sum_k 1 / ||M_k^{-1} phi||^2 for diagonal ensembles; always <= 1, with
// equality exactly when each row is constant over the support of phi.
// Throws UnsupportedError for general ensembles (the factorization is only
// established in the diagonal case).
double subinvariance_ratio(const MeasurementEnsemble& ensemble,
                           const QuantumState& phi);

// rho(phi) = 1 / prod_i |phi_i|^2, the Lyapunov density that blows up on
// {phi : some phi_i = 0}.  Evaluations with any |phi_i| < 1e-14 return
// +infinity; callers treat such points as the (measure-zero) singular set.
class FockLyapunovDensity {
 public:
  explicit FockLyapunovDensity(int dim);
  int dim() const { return dim_; }
  double operator()(const QuantumState& phi) const;
  bool is_singular(const QuantumState& phi) const;
  // min_i |phi_i|: proxy distance to the singular set.
  double singular_distance(const QuantumState& phi) const;

 private:
  int dim_;
};

// The ensemble as a generic state-dependent IFS on the complex sphere, for the
// engine-level operations (stepping, ensembles, generic Perron evaluation).
IfsModel<QuantumState> to_ifs_model(const MeasurementEnsemble& ensemble);

}  // namespace sweepcert::qnd
