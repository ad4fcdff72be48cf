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

#pragma once

#include <array>

#include "twoq/matcore.hpp"

namespace twoq {

/// Canonical coordinates [c1, c2, c3] of a local equivalence class, in
/// radians. Chamber-valid points satisfy
/// 0 <= c3 <= c2 <= min(c1, pi - c1).
struct WeylPoint {
  double c1 = 0, c2 = 0, c3 = 0;

  std::array<double, 3> as_array() const { return {c1, c2, c3}; }
  double max_abs_diff(const WeylPoint &o) const;
};

/// The three local invariants, normalized so that the identity maps to
/// (4, 0, 12) and CNOT to (0, 0, 4):
///   g1 + i g2 = tr^2(m) / 4,   g3 = Re[tr^2(m) - tr(m^2)]
/// where m is the magic Gram matrix of the special-unitary representative.
struct LocalInvariants {
  double g1 = 0, g2 = 0, g3 = 0;

  double max_abs_diff(const LocalInvariants &o) const;
};

/// The trace form (tr m, g3) of the invariants. tr m itself is only defined
/// up to sign, because the special-unitary representative of a gate is only
/// defined up to a power of i. Closed-form expressions for circuit families
/// are often easier to state in this form.
struct TraceInvariants {
  Complex trace;  ///< tr m
  double g3 = 0;

  /// Squares the trace into the sign-free convention above.
  LocalInvariants to_local() const;
};

/// The magic basis: columns |Phi+>, i|Phi->, i|Psi+>, |Psi->. In this basis
/// SU(2)xSU(2) becomes SO(4) and the canonical gate becomes diagonal with
/// phases (c1-c2+c3, -c1+c2+c3, c1+c2-c3, -c1-c2-c3) / 2.
const Mat4 &magic_basis();

/// m = (Q^dag v Q)^T (Q^dag v Q) with v the special-unitary representative
/// of u. Complex symmetric and unitary.
Mat4 magic_gram(const Unitary4 &u);

LocalInvariants local_invariants(const Unitary4 &u);

/// tr m and g3 for the representative chosen by special_unitarize().
TraceInvariants trace_invariants(const Unitary4 &u);

/// Invariants of the canonical gate A(c), in closed form.
LocalInvariants invariants_from_weyl(const WeylPoint &c);

/// Closed-form trace invariants of the two-B circuit
///   B . (e^{c1 (i/2) sy} (x) e^{b2 (i/2) sz} e^{b1 (i/2) sy} e^{b2 (i/2) sz}) . B
/// with the expressions taken literally.
TraceInvariants two_b_circuit_trace_invariants(double c1, double beta1,
                                               double beta2);

/// two_b_circuit_trace_invariants(...) converted with
/// TraceInvariants::to_local().
LocalInvariants two_b_circuit_invariants(double c1, double beta1, double beta2);

bool locally_equivalent(const Unitary4 &u, const Unitary4 &v, double tol = 1e-8);

}  // namespace twoq
