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

#include <functional>

#include "sweepcert/quantum_state.hpp"
#include "sweepcert/random_stream.hpp"

namespace sweepcert {

struct MonteCarloEstimate {
  double value = 0.0;
  double std_error = 0.0;   // always >= 0
  long long n_samples = 0;  // samples that entered the estimate
};

// Surface volume of S^{2N-1} = 2 pi^N / (N-1)!, the total mass of the
// reference measure on the complex sphere of complex dimension N.
double sphere_volume(int dim_complex);

// vol(S^{2N-1}) times the sample mean of g over uniform sphere draws.
//
// Non-finite evaluations of g are rejected (the draw is discarded) and
// counted; more than 0.01% of them raises SingularityExposureError.  The
// result is a pure function of (g, dim_complex, n, seed, stream_index).
MonteCarloEstimate mc_integral_on_sphere(
    const std::function<double(const QuantumState&)>& g, int dim_complex,
    long long n, RandomStream rng);

}  // namespace sweepcert
