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

#include <stdexcept>
#include <string>

namespace sweepcert {

// Common base so callers can catch toolkit failures in one handler.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidArgumentError : public Error {
 public:
  using Error::Error;
};

// Branch weights of an IFS model failed to sum to one within tolerance.
class ModelInconsistencyError : public Error {
 public:
  using Error::Error;
};

// A trajectory drifted off the state space by more than the guard allows.
class IntegrityError : public Error {
 public:
  using Error::Error;
};

// A density evaluated non-finite at the preimage of some branch.
class SingularEvaluationError : public Error {
 public:
  SingularEvaluationError(const std::string& what, int branch)
      : Error(what), branch_(branch) {}
  int branch() const { return branch_; }

 private:
  int branch_;
};

// Too many non-finite integrand evaluations during Monte Carlo integration.
class SingularityExposureError : public Error {
 public:
  SingularityExposureError(const std::string& what, long long n_rejected,
                           long long n_total)
      : Error(what), n_rejected_(n_rejected), n_total_(n_total) {}
  long long n_rejected() const { return n_rejected_; }
  long long n_total() const { return n_total_; }

 private:
  long long n_rejected_;
  long long n_total_;
};

// Measurement map applied to a vector it (numerically) annihilates.
class NearSingularError : public Error {
 public:
  using Error::Error;
};

// Operation requested on a model kind it is not defined for.
class UnsupportedError : public Error {
 public:
  using Error::Error;
};

// Adaptive quadrature ran out of budget; the best estimate so far is attached.
class QuadratureError : public Error {
 public:
  QuadratureError(const std::string& what, double best_estimate,
                  double error_estimate)
      : Error(what),
        best_estimate_(best_estimate),
        error_estimate_(error_estimate) {}
  double best_estimate() const { return best_estimate_; }
  double error_estimate() const { return error_estimate_; }

 private:
  double best_estimate_;
  double error_estimate_;
};

// Configuration file is malformed, has unknown keys, or out-of-range values.
class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace sweepcert
