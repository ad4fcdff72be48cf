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

#include "twoq/bsynth.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "least_squares.hpp"

namespace twoq {

namespace {

constexpr double kAnalyticAcceptance = 1e-8;
constexpr double kMiddleSolveTol = 1e-9;
constexpr double kSynthesisTol = 1e-6;

}  // namespace

BetaPair beta_from_weyl(const WeylPoint &c) {
  const double s2 = std::sin(c.c2 / 2);
  const double k3 = std::cos(c.c3 / 2);
  const double w = s2 * s2 * k3 * k3;
  const double beta1 = std::acos(std::clamp(1 - 4 * w, -1.0, 1.0));

  const double num = std::cos(c.c2) * std::cos(c.c3);
  const double den = 1 - 2 * w;
  double ratio;
  if (std::abs(den) < 1e-14 && std::abs(num) < 1e-12) {
    ratio = 1;  // DCNOT vertex, b1 = pi makes b2 irrelevant
  } else {
    ratio = num / den;
  }
  if (!(ratio >= -1e-12 && ratio <= 1 + 1e-12))
    throw DomainError("beta_from_weyl: sqrt argument " + std::to_string(ratio) +
                      " outside [0, 1]; point is not in the Weyl chamber");
  const double beta2 = std::asin(std::sqrt(std::clamp(ratio, 0.0, 1.0)));
  return {beta1, beta2};
}

MiddleParams analytic_middle_params(const WeylPoint &c) {
  const BetaPair b = beta_from_weyl(c);
  return {c.c1, b.beta1, b.beta2, MiddleBranch::analytic, MiddleWires::standard};
}

TwoQubitCircuit middle_circuit(const MiddleParams &p) {
  const Unitary2 yrot = su2_exp(Axis::y, p.theta_top);
  const Unitary2 zyz =
      su2_exp(Axis::z, p.beta2) * su2_exp(Axis::y, p.beta1) * su2_exp(Axis::z, p.beta2);
  const Wire ywire = p.wires == MiddleWires::standard ? Wire::top : Wire::bottom;
  TwoQubitCircuit c;
  c.two(BGate{})
      .single(ywire, yrot, "ry(" + format_double(p.theta_top) + ")")
      .single(other(ywire), zyz,
              "zyz(" + format_double(p.beta2) + "," + format_double(p.beta1) + "," +
                  format_double(p.beta2) + ")")
      .two(BGate{});
  return c;
}

MiddleSolution solve_middle_params(const LocalInvariants &target, const MiddleParams &seed) {
  using V = detail::Vec<3>;
  std::vector<MiddleParams> starts;
  for (MiddleWires wires : {seed.wires, seed.wires == MiddleWires::standard
                                            ? MiddleWires::swapped
                                            : MiddleWires::standard}) {
    for (int mask = 0; mask < 8; ++mask) {
      MiddleParams p = seed;
      p.wires = wires;
      if (mask & 1) p.beta1 = -p.beta1;
      if (mask & 2) p.beta2 = kPi - p.beta2;
      if (mask & 4) p.theta_top = -p.theta_top;
      starts.push_back(p);
    }
  }
  // A coarse grid as a last resort.
  for (double th : {0.5, 1.5, 2.5})
    for (double b1 : {0.5, 1.5, 2.5})
      for (double b2 : {0.4, 1.2})
        starts.push_back({th, b1, b2, MiddleBranch::solved, seed.wires});

  double best = std::numeric_limits<double>::infinity();
  for (const MiddleParams &start : starts) {
    auto f = [&](const V &x) -> V {
      MiddleParams p = start;
      p.theta_top = x(0);
      p.beta1 = x(1);
      p.beta2 = x(2);
      const LocalInvariants g = local_invariants(evaluate(middle_circuit(p)));
      return V(g.g1 - target.g1, g.g2 - target.g2, g.g3 - target.g3);
    };
    const auto res = detail::levenberg_marquardt<3>(
        f, V(start.theta_top, start.beta1, start.beta2));
    best = std::min(best, res.residual);
    if (res.residual < kMiddleSolveTol) {
      MiddleParams p = start;
      p.theta_top = res.x(0);
      p.beta1 = res.x(1);
      p.beta2 = res.x(2);
      const bool untouched = &start == &starts.front() && res.steps == 0;
      p.branch = untouched ? seed.branch : MiddleBranch::solved;
      return {p, res.residual, res.steps};
    }
  }
  throw ConvergenceError("solve_middle_params: no start converged", best);
}

namespace {

BSynthesisResult close_with_locals(const Unitary4 &u, const KakDecomposition &target,
                                   const MiddleParams &p) {
  const TwoQubitCircuit mid = middle_circuit(p);
  const KakDecomposition mk = kak(evaluate(mid));
  TwoQubitCircuit out;
  out.single(Wire::top, mk.k2_top.adjoint() * target.k2_top)
      .single(Wire::bottom, mk.k2_bottom.adjoint() * target.k2_bottom);
  for (const auto &g : mid.gates()) out.add(g);
  out.single(Wire::top, target.k1_top * mk.k1_top.adjoint())
      .single(Wire::bottom, target.k1_bottom * mk.k1_bottom.adjoint());
  out = merge_locals(out);

  BSynthesisResult r;
  r.residual = dist_up_to_phase(evaluate(out), u);
  r.circuit = std::move(out);
  r.middle = p;
  r.c = target.c;
  return r;
}

}  // namespace

BSynthesisResult synthesize(const Unitary4 &u) {
  const KakDecomposition target = kak(u);

  MiddleParams seed{target.c.c1, 0, kPi / 2, MiddleBranch::solved, MiddleWires::standard};
  try {
    seed = analytic_middle_params(target.c);
    BSynthesisResult r = close_with_locals(u, target, seed);
    if (r.residual <= kAnalyticAcceptance) return r;
  } catch (const DomainError &) {
    // fall through to the numerical solve
  }

  const MiddleSolution sol = solve_middle_params(local_invariants(u), seed);
  BSynthesisResult r = close_with_locals(u, target, sol.params);
  r.used_fallback = true;
  if (!(r.residual < kSynthesisTol))
    throw ConvergenceError("synthesize: residual above tolerance", r.residual);
  return r;
}

TwoQubitCircuit b_equivalent_circuit() {
  TwoQubitCircuit c;
  c.two(CnotGate{}).two(ControlledGate{Wire::bottom, su2_exp(Axis::x, kPi / 2)});
  return c;
}

Unitary4 b_basis_action_matrix() {
  const Mat2 rot = su2_exp(Axis::x, kPi / 2).matrix();
  Mat4 out = Mat4::Zero();
  for (int m = 0; m < 2; ++m) {
    for (int n = 0; n < 2; ++n) {
      const int k = m ^ n;
      Eigen::Vector2cd top = Eigen::Vector2cd::Zero(), bottom = Eigen::Vector2cd::Zero();
      top(m) = 1;
      bottom(k) = 1;
      if (k == 1) top = rot * top;
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) out(2 * i + j, 2 * m + n) = top(i) * bottom(j);
    }
  }
  return Unitary4::checked(out, kUnitaryTol);
}

bool basis_action_check() {
  return locally_equivalent(b_basis_action_matrix(), gates::b(), 1e-9);
}

}  // namespace twoq
