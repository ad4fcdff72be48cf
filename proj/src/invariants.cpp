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

#include "twoq/invariants.hpp"

#include <algorithm>
#include <cmath>

namespace twoq {

double WeylPoint::max_abs_diff(const WeylPoint &o) const {
  return std::max({std::abs(c1 - o.c1), std::abs(c2 - o.c2), std::abs(c3 - o.c3)});
}

double LocalInvariants::max_abs_diff(const LocalInvariants &o) const {
  return std::max({std::abs(g1 - o.g1), std::abs(g2 - o.g2), std::abs(g3 - o.g3)});
}

LocalInvariants TraceInvariants::to_local() const {
  const Complex sq = trace * trace / 4.0;
  return {sq.real(), sq.imag(), g3};
}

const Mat4 &magic_basis() {
  static const Mat4 q = [] {
    const double s = 1.0 / std::sqrt(2.0);
    Mat4 m;
    // clang-format off
    m << s,  kI * s, 0,       0,
         0,  0,      kI * s,  s,
         0,  0,      kI * s, -s,
         s, -kI * s, 0,       0;
    // clang-format on
    return m;
  }();
  return q;
}

Mat4 magic_gram(const Unitary4 &u) {
  const Mat4 &q = magic_basis();
  const Mat4 mb = q.adjoint() * special_unitarize(u).v.matrix() * q;
  return mb.transpose() * mb;
}

namespace {

struct Traces {
  Complex tr, tr_sq;  // tr m, tr m^2
};

Traces gram_traces(const Unitary4 &u) {
  const Mat4 m = magic_gram(u);
  return {m.trace(), (m * m).trace()};
}

}  // namespace

LocalInvariants local_invariants(const Unitary4 &u) {
  const auto [tr, tr_sq] = gram_traces(u);
  const Complex t2 = tr * tr;
  const Complex g3 = t2 - tr_sq;
  if (std::abs(g3.imag()) > 1e-8)
    throw NumericalError("imaginary part of g3 is " + std::to_string(g3.imag()));
  return {t2.real() / 4.0, t2.imag() / 4.0, g3.real()};
}

TraceInvariants trace_invariants(const Unitary4 &u) {
  const auto [tr, tr_sq] = gram_traces(u);
  return {tr, (tr * tr - tr_sq).real()};
}

LocalInvariants invariants_from_weyl(const WeylPoint &c) {
  const double cos2 = std::pow(std::cos(c.c1) * std::cos(c.c2) * std::cos(c.c3), 2);
  const double sin2 = std::pow(std::sin(c.c1) * std::sin(c.c2) * std::sin(c.c3), 2);
  const double g1 = 4.0 * (cos2 - sin2);
  const double g2 = std::sin(2 * c.c1) * std::sin(2 * c.c2) * std::sin(2 * c.c3);
  const double g3 = 4.0 * (4.0 * cos2 - 4.0 * sin2 -
                           std::cos(2 * c.c1) * std::cos(2 * c.c2) * std::cos(2 * c.c3));
  return {g1, g2, g3};
}

TraceInvariants two_b_circuit_trace_invariants(double c1, double beta1, double beta2) {
  const double cb1 = std::cos(beta1);
  const double cb2 = std::cos(beta2);
  const double re = 4.0 * std::cos(c1) * std::pow(std::cos(beta1 / 2), 2) *
                    std::pow(std::sin(beta2), 2);
  const double im = 4.0 * std::sin(c1) * std::sin(beta1) * cb2;
  const double g3 =
      2.0 * (std::pow(cb2, 4) * std::pow(cb1 + 1, 2) +
             2.0 * cb2 * cb2 * (cb1 * cb1 - 2 * cb1 - 3) +
             4.0 * std::pow(std::cos(c1), 2) + cb1 * cb1 + 2 * cb1 - 1);
  return {Complex(re, im), g3};
}

LocalInvariants two_b_circuit_invariants(double c1, double beta1, double beta2) {
  return two_b_circuit_trace_invariants(c1, beta1, beta2).to_local();
}

bool locally_equivalent(const Unitary4 &u, const Unitary4 &v, double tol) {
  return local_invariants(u).max_abs_diff(local_invariants(v)) <= tol;
}

}  // namespace twoq
