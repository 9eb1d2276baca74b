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

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <exception>
#include <functional>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "sweepcert/errors.hpp"
#include "sweepcert/monte_carlo.hpp"
#include "sweepcert/quantum_state.hpp"
#include "sweepcert/random_stream.hpp"

namespace sweepcert {

enum class SpaceKind { complex_sphere, half_line };

struct StateSpace {
  SpaceKind kind = SpaceKind::complex_sphere;
  int dim_complex = 0;  // complex sphere
  double sigma = 0.0;   // half line [sigma, inf)
};

// State-dependent iterated function system: x -> S_k(x) with probability
// p_k(x).  The maps must be invertible with known inverse-Jacobian
// determinants so the transfer operator has a pointwise closed form.
template <class State>
struct IfsModel {
  int branch_count = 0;
  std::function<State(int, const State&)> forward_map;
  std::function<State(int, const State&)> inverse_map;
  // |det D S_k^{-1}(x)| on the relevant manifold.
  std::function<double(int, const State&)> inv_jacobian_det;
  std::function<double(int, const State&)> weight;
  StateSpace space;
  // Distance from the state-space constraint (0 on the space itself).
  std::function<double(const State&)> membership_error;
  // Projection back onto the state space (renormalization).
  std::function<State(const State&)> project;
};

template <class State>
struct TrajectorySnapshot {
  long long step_index = 0;
  std::vector<State> states;
};

template <class State>
struct StepResult {
  int branch = 0;
  State next;
};

// P(x, A) = sum over branches whose image lands in A of weight(k, x).
template <class State>
double transition_probability(const IfsModel<State>& model, const State& x,
                              const std::function<bool(const State&)>& indicator) {
  double p = 0.0;
  for (int k = 0; k < model.branch_count; ++k) {
    if (indicator(model.forward_map(k, x))) p += model.weight(k, x);
  }
  // Clamp away one-ulp excursions so the value stays a probability.
  if (p < 0.0) p = 0.0;
  if (p > 1.0) p = 1.0;
  return p;
}

// One step of the chain: branch k with probability weight(k, x), by an
// inverse-CDF walk over cumulative weights.  Consumes exactly one uniform.
template <class State>
StepResult<State> step(const IfsModel<State>& model, const State& x,
                       RandomStream& rng) {
  double total = 0.0;
  for (int k = 0; k < model.branch_count; ++k) total += model.weight(k, x);
  if (std::abs(total - 1.0) > 1e-9) {
    throw ModelInconsistencyError(
        "step: branch weights sum to " + std::to_string(total) +
        ", deviating from 1 beyond 1e-9");
  }
  const double u = rng.uniform() * total;
  double acc = 0.0;
  int chosen = model.branch_count - 1;  // guards u == total after rounding
  for (int k = 0; k < model.branch_count; ++k) {
    acc += model.weight(k, x);
    if (u < acc) {
      chosen = k;
      break;
    }
  }
  return {chosen, model.forward_map(chosen, x)};
}

// Pointwise transfer operator for invertible branches:
// sum_k p_k(S_k^{-1} x) rho(S_k^{-1} x) |det D S_k^{-1}(x)|.
template <class State>
double perron_pointwise(const IfsModel<State>& model,
                        const std::function<double(const State&)>& rho,
                        const State& x) {
  double sum = 0.0;
  for (int k = 0; k < model.branch_count; ++k) {
    const State pre = model.inverse_map(k, x);
    const double r = rho(pre);
    if (!std::isfinite(r)) {
      throw SingularEvaluationError(
          "perron_pointwise: density non-finite at preimage of branch " +
              std::to_string(k),
          k);
    }
    sum += model.weight(k, pre) * r * model.inv_jacobian_det(k, x);
  }
  return sum;
}

// Wraps an IfsModel as the minimal process interface run_ensemble needs.
template <class State>
struct IfsProcess {
  const IfsModel<State>* model;

  State advance(const State& x, RandomStream& rng) const {
    return step(*model, x, rng).next;
  }
  double membership_error(const State& x) const {
    return model->membership_error(x);
  }
  State project(const State& x) const { return model->project(x); }
};

// n_traj independent trajectories recorded at the given checkpoints.
//
// Trajectory i consumes substream i of the passed stream, so the result is a
// pure function of (inputs, seed, stream_index) regardless of n_workers.
// Membership drift beyond 1e-8 before re-projection raises IntegrityError.
template <class State, class Proc>
std::vector<TrajectorySnapshot<State>> run_ensemble(
    const Proc& proc, const std::function<State(RandomStream&)>& initial_sampler,
    long long n_traj, const std::vector<long long>& checkpoints,
    RandomStream rng, int n_workers = 1) {
  if (n_traj < 1) throw InvalidArgumentError("run_ensemble: n_traj must be >= 1");
  if (n_workers < 1) throw InvalidArgumentError("run_ensemble: n_workers must be >= 1");
  if (checkpoints.empty()) {
    throw InvalidArgumentError("run_ensemble: checkpoints must be non-empty");
  }
  for (std::size_t i = 0; i < checkpoints.size(); ++i) {
    if (checkpoints[i] < 0 ||
        (i > 0 && checkpoints[i] <= checkpoints[i - 1])) {
      throw InvalidArgumentError(
          "run_ensemble: checkpoints must be non-negative and strictly ascending");
    }
  }

  std::vector<TrajectorySnapshot<State>> snapshots(checkpoints.size());
  for (std::size_t c = 0; c < checkpoints.size(); ++c) {
    snapshots[c].step_index = checkpoints[c];
    snapshots[c].states.resize(static_cast<std::size_t>(n_traj));
  }

  auto run_range = [&](long long lo, long long hi) {
    for (long long i = lo; i < hi; ++i) {
      RandomStream traj_rng = rng.substream(static_cast<std::uint64_t>(i));
      State x = initial_sampler(traj_rng);
      if (proc.membership_error(x) > 1e-8) {
        throw IntegrityError("run_ensemble: initial state off the state space");
      }
      x = proc.project(x);
      std::size_t next_cp = 0;
      for (long long n = 0;; ++n) {
        if (n == checkpoints[next_cp]) {
          snapshots[next_cp].states[static_cast<std::size_t>(i)] = x;
          if (++next_cp == checkpoints.size()) break;
        }
        x = proc.advance(x, traj_rng);
        if (proc.membership_error(x) > 1e-8) {
          throw IntegrityError(
              "run_ensemble: state drifted off the state space at step " +
              std::to_string(n + 1));
        }
        x = proc.project(x);
      }
    }
  };

  if (n_workers == 1 || n_traj == 1) {
    run_range(0, n_traj);
    return snapshots;
  }

  const int workers = static_cast<int>(
      std::min<long long>(n_workers, n_traj));
  std::vector<std::thread> threads;
  std::vector<std::exception_ptr> failures(static_cast<std::size_t>(workers));
  const long long chunk = (n_traj + workers - 1) / workers;
  for (int w = 0; w < workers; ++w) {
    const long long lo = w * chunk;
    const long long hi = std::min<long long>(lo + chunk, n_traj);
    threads.emplace_back([&, w, lo, hi]() {
      try {
        if (lo < hi) run_range(lo, hi);
      } catch (...) {
        failures[static_cast<std::size_t>(w)] = std::current_exception();
      }
    });
  }
  for (auto& t : threads) t.join();
  for (const auto& failure : failures) {
    if (failure) std::rethrow_exception(failure);
  }
  return snapshots;
}

template <class State>
std::vector<TrajectorySnapshot<State>> run_ensemble(
    const IfsModel<State>& model,
    const std::function<State(RandomStream&)>& initial_sampler, long long n_traj,
    const std::vector<long long>& checkpoints, RandomStream rng,
    int n_workers = 1) {
  IfsProcess<State> proc{&model};
  return run_ensemble<State>(proc, initial_sampler, n_traj, checkpoints, rng,
                             n_workers);
}

// Residual of the duality identity  int_A (P rho) dm = int rho(x) P(x, A) dm.
//
// Left side: Monte Carlo sphere integral of 1_A * (P rho).  Right side:
// expectation of the transition probability under draws from rho.  The two
// sides use independent substreams so their errors add in quadrature.
inline MonteCarloEstimate duality_residual(
    const IfsModel<QuantumState>& model,
    const std::function<double(const QuantumState&)>& rho,
    const std::function<QuantumState(RandomStream&)>& rho_sampler,
    const std::function<bool(const QuantumState&)>& indicator, long long n_mc,
    RandomStream rng) {
  if (n_mc < 2) throw InvalidArgumentError("duality_residual: n_mc must be >= 2");
  RandomStream lhs_rng = rng.substream(0);
  RandomStream rhs_rng = rng.substream(1);

  const MonteCarloEstimate lhs = mc_integral_on_sphere(
      [&](const QuantumState& x) {
        return indicator(x) ? perron_pointwise(model, rho, x) : 0.0;
      },
      model.space.dim_complex, n_mc, lhs_rng);

  double mean = 0.0;
  double m2 = 0.0;
  for (long long i = 0; i < n_mc; ++i) {
    const QuantumState x = rho_sampler(rhs_rng);
    const double p = transition_probability(model, x, indicator);
    const double delta = p - mean;
    mean += delta / static_cast<double>(i + 1);
    m2 += delta * (p - mean);
  }
  const double rhs_se =
      std::sqrt(m2 / static_cast<double>(n_mc - 1) / static_cast<double>(n_mc));
  const double combined =
      std::sqrt(lhs.std_error * lhs.std_error + rhs_se * rhs_se);
  return {lhs.value - mean, combined, n_mc};
}

}  // namespace sweepcert
