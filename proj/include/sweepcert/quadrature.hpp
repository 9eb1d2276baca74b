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

namespace sweepcert {

// Adaptive one-dimensional quadrature with an absolute error target.
//
// Each segment is integrated with 15-point Gauss-Legendre; the difference to
// the embedded 7-point rule serves as the error estimate, and the segment with
// the worst estimate is bisected until the summed error drops below `tol`.
// An infinite upper limit is handled by the substitution x = a + t/(1-t),
// which maps [a, inf) onto [0, 1); Gauss nodes are interior, so the endpoint
// singularity of the substitution is never evaluated.
//
// Throws QuadratureError (carrying the best estimate) when `max_segments`
// bisections are not enough, and InvalidArgumentError for a NaN bound,
// non-positive tolerance, or b < a.
double integrate_1d(const std::function<double(double)>& f, double a, double b,
                    double tol, int max_segments = 4000);

}  // namespace sweepcert
