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

#include "twoq/josephson.hpp"

#include <algorithm>
#include <boost/math/tools/roots.hpp>
#include <cmath>
#include <limits>

#include "least_squares.hpp"
#include "twoq/json_io.hpp"
#include "twoq/weylkak.hpp"

namespace twoq::josephson {

namespace {

void require_positive(const Params &p) {
  if (!(p.alpha > 0)) throw InputError("alpha must be positive");
}

constexpr double kAlphaGridLo = 0.05;
constexpr double kAlphaGridHi = 20.0;
constexpr int kAlphaGridPoints = 20000;

}  // namespace

TrigPair trig_pair(const Params &p, double t) {
  const double a = p.alpha;
  return {std::cos(a * a * t), std::cos(std::sqrt(a * a + 1) * a * t)};
}

Hermitian4 hamiltonian(const Params &p) {
  require_positive(p);
  const double a = p.alpha;
  const Mat2 id = Mat2::Identity();
  const Mat4 h = -(a / 2) * (kron(pauli::x(), id) + kron(id, pauli::x())) +
                 a * a * pauli::pair(Axis::y);
  return Hermitian4::checked(h);
}

TraceInvariants closed_form_trace_invariants(const Params &p, double t) {
  require_positive(p);
  const double a2 = p.alpha * p.alpha;
  const auto [x, y] = trig_pair(p, t);
  const double x2 = x * x, y2 = y * y;
  const double pre = 4 / (1 + a2);
  const double tr = pre * (a2 * (x2 + y2 - 1) + x2);
  const double g3 = pre * (3 * a2 - 1 - 4 * y2 * a2 + 8 * a2 * x2 * y2 + 4 * x2 - 4 * x2 * a2);
  return {Complex(tr, 0), g3};
}

LocalInvariants invariants_closed_form(const Params &p, double t) {
  return closed_form_trace_invariants(p, t).to_local();
}

LocalInvariants evolve_invariants(const Params &p, double t) {
  return local_invariants(exp_i_hermitian(hamiltonian(p), t));
}

std::vector<TrajectorySample> trajectory(const Params &p, double t_max, int steps) {
  if (steps < 2) throw InputError("trajectory needs at least 2 steps");
  if (!(t_max >= 0)) throw InputError("t_max must be non-negative");
  const Hermitian4 h = hamiltonian(p);
  std::vector<TrajectorySample> out;
  out.reserve(steps);
  for (int i = 0; i < steps; ++i) {
    const double t = t_max * i / (steps - 1);
    const Unitary4 u = exp_i_hermitian(h, t);
    out.push_back({t, local_invariants(u), weyl_coordinates(u)});
  }
  return out;
}

void write_trajectory_csv(std::ostream &os, const std::vector<TrajectorySample> &samples) {
  os << "t,g1,g2,g3,c1,c2,c3\n";
  for (const auto &s : samples) {
    os << format_double(s.t) << ',' << format_double(s.inv.g1) << ','
       << format_double(s.inv.g2) << ',' << format_double(s.inv.g3) << ','
       << format_double(s.c.c1) << ',' << format_double(s.c.c2) << ','
       << format_double(s.c.c3) << '\n';
  }
}

namespace {

double branch_equation(double alpha, int n) {
  const double arg = (2 * n + 1) * kPi / 8;
  const double ratio = (1 + alpha * alpha) / (alpha * alpha);
  const double s = std::sin(std::sqrt(1 + 1 / (alpha * alpha)) * arg);
  const double c = std::cos(arg);
  return s * s - ratio * c * c;
}

double closed_form_residual(const Params &p, double t, const LocalInvariants &target) {
  return invariants_closed_form(p, t).max_abs_diff(target);
}

bool earlier(const ReachSolution &a, const ReachSolution &b) {
  if (std::abs(a.t - b.t) <= 1e-9) return a.alpha < b.alpha;
  return a.t < b.t;
}

}  // namespace

std::vector<ReachSolution> solve_b_branches(int n_max) {
  if (n_max < 0) throw InputError("n_max must be non-negative");
  std::vector<double> grid(kAlphaGridPoints);
  const double llo = std::log(kAlphaGridLo), lhi = std::log(kAlphaGridHi);
  for (int i = 0; i < kAlphaGridPoints; ++i)
    grid[i] = std::exp(llo + (lhi - llo) * i / (kAlphaGridPoints - 1));

  std::vector<ReachSolution> out;
  for (int n = 0; n <= n_max; ++n) {
    auto f = [n](double a) { return branch_equation(a, n); };
    const double x = std::cos((2 * n + 1) * kPi / 8);
    double prev = f(grid[0]);
    for (int i = 1; i < kAlphaGridPoints; ++i) {
      const double cur = f(grid[i]);
      if (prev == 0 || (prev < 0) == (cur < 0)) {
        prev = cur;
        continue;
      }
      prev = cur;
      const auto [lo, hi] = boost::math::tools::bisect(
          f, grid[i - 1], grid[i], [](double l, double h) { return h - l < 1e-13; });
      const double alpha = 0.5 * (lo + hi);
      // y^2 from the g1 = 0 condition must be a valid squared cosine
      const double y2 = 1 - (1 + alpha * alpha) / (alpha * alpha) * x * x;
      if (y2 < -1e-12 || y2 > 1 + 1e-12) continue;
      ReachSolution s;
      s.alpha = alpha;
      s.t = (2 * n + 1) * kPi / (8 * alpha * alpha);
      s.n = n;
      s.tag = TargetTag::b;
      s.residual = closed_form_residual({alpha}, s.t, {0, 0, 0});
      s.beyond_feasible_alpha = alpha > kFeasibleAlpha;
      out.push_back(s);
    }
  }
  return out;
}

ReachSolution min_time_b_solution(int n_max) {
  const auto all = solve_b_branches(n_max);
  if (all.empty())
    throw ConvergenceError("no B solution on the requested branches",
                           std::numeric_limits<double>::infinity());
  return *std::min_element(all.begin(), all.end(), earlier);
}

ReachSolution solve_target_class(const LocalInvariants &target, Interval alpha_range,
                                 Interval t_range, TargetTag tag) {
  if (!(alpha_range.lo > 0 && alpha_range.hi > alpha_range.lo))
    throw InputError("alpha range must be a nonempty interval of positive values");
  if (!(t_range.lo >= 0 && t_range.hi > t_range.lo))
    throw InputError("t range must be a nonempty interval of non-negative values");

  // The closed form gives tr m, which is linear where the squared
  // invariants are flat; solve for both signs of the trace instead.
  const Complex root = 2.0 * std::sqrt(Complex(target.g1, target.g2));
  std::vector<double> traces = {root.real()};
  if (std::abs(root.real()) > 0) traces.push_back(-root.real());

  constexpr int na = 400, nt = 2000;
  auto alpha_at = [&](int i) {
    return alpha_range.lo + (alpha_range.hi - alpha_range.lo) * i / (na - 1);
  };
  auto t_at = [&](int j) { return t_range.lo + (t_range.hi - t_range.lo) * j / (nt - 1); };

  double best_residual = std::numeric_limits<double>::infinity();
  std::optional<ReachSolution> best;
  std::vector<double> r(static_cast<std::size_t>(na) * nt);
  auto at = [&](int i, int j) -> double & { return r[static_cast<std::size_t>(i) * nt + j]; };

  for (double trace : traces) {
    auto residual2 = [&](double alpha, double t) {
      if (!(alpha > 0)) return detail::Vec<2>(1e6, 1e6);
      const TraceInvariants g = closed_form_trace_invariants({alpha}, t);
      return detail::Vec<2>(g.trace.real() - trace, g.g3 - target.g3);
    };
    for (int i = 0; i < na; ++i)
      for (int j = 0; j < nt; ++j) {
        at(i, j) = residual2(alpha_at(i), t_at(j)).norm();
        best_residual = std::min(best_residual, closed_form_residual({alpha_at(i)}, t_at(j), target));
      }

    for (int i = 0; i < na; ++i) {
      for (int j = 0; j < nt; ++j) {
        const double v = at(i, j);
        if (!(v < 1.0)) continue;
        bool local_min = true;
        for (int di = -1; di <= 1 && local_min; ++di)
          for (int dj = -1; dj <= 1; ++dj) {
            const int ii = i + di, jj = j + dj;
            if (ii < 0 || ii >= na || jj < 0 || jj >= nt) continue;
            if (at(ii, jj) < v - 1e-12) {
              local_min = false;
              break;
            }
          }
        if (!local_min) continue;
        // Skip the Newton polish when it cannot beat the current best time.
        if (best && t_at(std::max(0, j - 1)) > best->t + 1e-9) continue;

        auto f = [&](const detail::Vec<2> &x) { return residual2(x(0), x(1)); };
        detail::LmResult<2> sol{detail::Vec<2>(alpha_at(i), t_at(j)), v, 0};
        if (v > 1e-12) sol = detail::levenberg_marquardt<2>(f, sol.x);
        const double alpha = sol.x(0), t = sol.x(1);
        if (!(alpha >= alpha_range.lo - 1e-12 && alpha <= alpha_range.hi + 1e-12 &&
              t >= t_range.lo - 1e-12 && t <= t_range.hi + 1e-12))
          continue;
        const double res = closed_form_residual({alpha}, t, target);
        best_residual = std::min(best_residual, res);
        if (sol.residual > 1e-10 || res > 1e-6) continue;

        ReachSolution cand;
        cand.alpha = alpha;
        cand.t = std::max(t, t_range.lo);
        cand.tag = tag;
        cand.residual = res;
        cand.beyond_feasible_alpha = alpha > kFeasibleAlpha;
        if (tag == TargetTag::b && cand.t > 0) {
          const double odd = cand.t * 8 * alpha * alpha / kPi;
          cand.n = static_cast<int>(std::lround((odd - 1) / 2));
        }
        if (!best || earlier(cand, *best)) best = cand;
      }
    }
  }
  if (!best) throw ConvergenceError("no solution in the search box", best_residual);
  return *best;
}

}  // namespace twoq::josephson
