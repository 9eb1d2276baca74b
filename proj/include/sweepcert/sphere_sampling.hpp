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

#include "sweepcert/quantum_state.hpp"
#include "sweepcert/random_stream.hpp"

namespace sweepcert {

// Uniform draw from the complex unit sphere of complex dimension N
// (equivalently the real sphere S^{2N-1}): 2N standard normals, normalized.
QuantumState sample_uniform_sphere(int dim_complex, RandomStream& rng);

// Uniform draw from the real unit sphere S^{dim-1}.
Eigen::VectorXd sample_uniform_real_sphere(int dim, RandomStream& rng);

}  // namespace sweepcert
