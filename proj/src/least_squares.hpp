// Copyright 2026 The twoq Authors
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

// Small dense damped-Newton (Levenberg-Marquardt) solver for square
// systems of a few unknowns. Internal to the library.

#pragma once

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>

namespace twoq::detail {

template <int N>
using Vec = Eigen::Matrix<double, N, 1>;

template <int N>
struct LmResult {
  Vec<N> x;
  double residual;  ///< Euclidean norm of f(x)
  int steps;        ///< accepted steps
};

struct LmOptions {
  double stop_residual = 1e-14;
  int max_iterations = 200;
};

template <int N, class F>
Eigen::Matrix<double, N, N> jacobian(F &f, const Vec<N> &x) {
  Eigen::Matrix<double, N, N> j;
  for (int k = 0; k < N; ++k) {
    const double h = 1e-7 * std::max(1.0, std::abs(x(k)));
    Vec<N> xp = x, xm = x;
    xp(k) += h;
    xm(k) -= h;
    j.col(k) = (f(xp) - f(xm)) / (2 * h);
  }
  return j;
}

template <int N, class F>
LmResult<N> levenberg_marquardt(F f, Vec<N> x, const LmOptions &opt = {}) {
  Vec<N> fx = f(x);
  double r = fx.norm();
  double lambda = 1e-3;
  int steps = 0;
  for (int it = 0; it < opt.max_iterations && r > opt.stop_residual; ++it) {
    const auto j = jacobian<N>(f, x);
    const Eigen::Matrix<double, N, N> jtj = j.transpose() * j;
    const Vec<N> g = j.transpose() * fx;
    bool improved = false;
    while (lambda < 1e12) {
      Eigen::Matrix<double, N, N> a = jtj;
      for (int k = 0; k < N; ++k) a(k, k) += lambda * (jtj(k, k) + 1e-12);
      const Vec<N> step = -a.ldlt().solve(g);
      const Vec<N> xn = x + step;
      const Vec<N> fn = f(xn);
      const double rn = fn.norm();
      if (std::isfinite(rn) && rn < r) {
        x = xn;
        fx = fn;
        r = rn;
        lambda = std::max(lambda / 3, 1e-15);
        improved = true;
        ++steps;
        break;
      }
      lambda *= 4;
    }
    if (!improved) break;
  }
  return {x, r, steps};
}

}  // namespace twoq::detail
