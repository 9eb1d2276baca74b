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

#include "sweepcert/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <vector>

#include "sweepcert/errors.hpp"

namespace sweepcert {

namespace {

// Gauss-Legendre nodes/weights on [-1, 1], n = 7 and n = 15.
constexpr int kN7 = 7;
constexpr double kX7[kN7] = {
    -9.49107912342758486e-01, -7.41531185599394460e-01,
    -4.05845151377397184e-01, 0.0,
    4.05845151377397184e-01,  7.41531185599394460e-01,
    9.49107912342758486e-01};
constexpr double kW7[kN7] = {
    1.29484966168870647e-01, 2.79705391489276589e-01,
    3.81830050505118312e-01, 4.17959183673468959e-01,
    3.81830050505118312e-01, 2.79705391489276589e-01,
    1.29484966168870647e-01};

constexpr int kN15 = 15;
constexpr double kX15[kN15] = {
    -9.87992518020485377e-01, -9.37273392400705951e-01,
    -8.48206583410427206e-01, -7.24417731360170070e-01,
    -5.70972172608538830e-01, -3.94151347077563385e-01,
    -2.01194093997434514e-01, 0.0,
    2.01194093997434514e-01,  3.94151347077563385e-01,
    5.70972172608538830e-01,  7.24417731360170070e-01,
    8.48206583410427206e-01,  9.37273392400705951e-01,
    9.87992518020485377e-01};
constexpr double kW15[kN15] = {
    3.07532419961186465e-02, 7.03660474881080689e-02,
    1.07159220467171773e-01, 1.39570677926153908e-01,
    1.66269205816993781e-01, 1.86161000015561878e-01,
    1.98431485327111246e-01, 2.02578241925560898e-01,
    1.98431485327111246e-01, 1.86161000015561878e-01,
    1.66269205816993781e-01, 1.39570677926153908e-01,
    1.07159220467171773e-01, 7.03660474881080689e-02,
    3.07532419961186465e-02};

struct Segment {
  double a, b;
  double value;   // 15-point estimate
  double error;   // |15-point - 7-point|
};

Segment evaluate(const std::function<double(double)>& f, double a, double b) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  double i7 = 0.0;
  for (int i = 0; i < kN7; ++i) i7 += kW7[i] * f(c + h * kX7[i]);
  double i15 = 0.0;
  for (int i = 0; i < kN15; ++i) i15 += kW15[i] * f(c + h * kX15[i]);
  i7 *= h;
  i15 *= h;
  return {a, b, i15, std::abs(i15 - i7)};
}

struct WorstFirst {
  bool operator()(const Segment& lhs, const Segment& rhs) const {
    return lhs.error < rhs.error;
  }
};

// Deterministic sum: segments ordered by left endpoint, independent of the
// order the adaptive loop produced them in.
double total_value(std::vector<Segment> segs) {
  std::sort(segs.begin(), segs.end(),
            [](const Segment& l, const Segment& r) { return l.a < r.a; });
  double total = 0.0;
  for (const Segment& s : segs) total += s.value;
  return total;
}

double integrate_finite(const std::function<double(double)>& f, double a,
                        double b, double tol, int max_segments) {
  std::priority_queue<Segment, std::vector<Segment>, WorstFirst> queue;
  queue.push(evaluate(f, a, b));
  double err_sum = queue.top().error;
  int n_segments = 1;
  while (err_sum > tol && n_segments < max_segments) {
    const Segment worst = queue.top();
    queue.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    if (!(mid > worst.a && mid < worst.b)) {
      // Interval no longer splittable in double precision; keep it as is.
      // Re-queue with zero error so it stops dominating the heap.
      queue.push({worst.a, worst.b, worst.value, 0.0});
      err_sum -= worst.error;
      continue;
    }
    const Segment left = evaluate(f, worst.a, mid);
    const Segment right = evaluate(f, mid, worst.b);
    err_sum += left.error + right.error - worst.error;
    queue.push(left);
    queue.push(right);
    ++n_segments;
  }
  std::vector<Segment> segs;
  segs.reserve(n_segments);
  while (!queue.empty()) {
    segs.push_back(queue.top());
    queue.pop();
  }
  const double value = total_value(std::move(segs));
  if (err_sum > tol) {
    throw QuadratureError(
        "integrate_1d: error target not reached within segment budget",
        value, err_sum);
  }
  return value;
}

}  // namespace

double integrate_1d(const std::function<double(double)>& f, double a, double b,
                    double tol, int max_segments) {
  if (std::isnan(a) || std::isnan(b)) {
    throw InvalidArgumentError("integrate_1d: NaN integration bound");
  }
  if (!(tol > 0.0)) {
    throw InvalidArgumentError("integrate_1d: tolerance must be positive");
  }
  if (std::isinf(a)) {
    throw InvalidArgumentError("integrate_1d: lower bound must be finite");
  }
  if (b < a) {
    throw InvalidArgumentError("integrate_1d: upper bound below lower bound");
  }
  if (a == b) return 0.0;
  if (std::isinf(b)) {
    // x = a + t/(1-t) maps t in [0,1) onto [a, inf); dx = dt/(1-t)^2.
    auto g = [&f, a](double t) {
      const double om = 1.0 - t;
      return f(a + t / om) / (om * om);
    };
    return integrate_finite(g, 0.0, 1.0, tol, max_segments);
  }
  return integrate_finite(f, a, b, tol, max_segments);
}

}  // namespace sweepcert
