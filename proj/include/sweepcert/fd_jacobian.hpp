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

namespace sweepcert {

struct FdJacobianResult {
  double value = 0.0;           // |det| of the tangent-space differential
  double error_estimate = 0.0;  // from step-halving (Richardson) disagreement
  bool step_warning = false;    // large disagreement: step too small or map rough
};

// |det| of the differential of a sphere-to-sphere map restricted to the
// tangent space, by central finite differences.
//
// Orthonormal tangent bases at the point and its image are built by
// Gram-Schmidt over coordinate axes, always dropping the axis with the
// largest component magnitude (lowest index on ties) so the frame is
// deterministic.  The result of step h and h/2 are combined by Richardson
// extrapolation; their disagreement feeds the error estimate and, when it is
// large relative to the value, the step_warning flag.
FdJacobianResult fd_jacobian_det_on_sphere(
    const std::function<Eigen::VectorXd(const Eigen::VectorXd&)>& map,
    const Eigen::VectorXd& point, double step = 1e-6);

}  // namespace sweepcert
