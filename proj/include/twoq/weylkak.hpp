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

#include <optional>
#include <string>
#include <vector>

#include "twoq/invariants.hpp"
#include "twoq/matcore.hpp"

namespace twoq {

/// A(c) = e^{c1 (i/2) sx sx} e^{c2 (i/2) sy sy} e^{c3 (i/2) sz sz}.
Unitary4 canonical_gate(const WeylPoint &c);

/// True if c satisfies 0 <= c3 <= c2 <= min(c1, pi - c1) within tol.
bool in_weyl_chamber(const WeylPoint &c, double tol = 1e-12);

/// u = e^{i phase} (k1_top (x) k1_bottom) A(c) (k2_top (x) k2_bottom),
/// with all four local factors in SU(2).
struct KakDecomposition {
  double phase = 0;
  Unitary2 k1_top, k1_bottom;
  Unitary2 k2_top, k2_bottom;
  WeylPoint c;

  Unitary4 reconstruct() const;
};

/// Cartan decomposition. c is always chamber-valid and equals
/// weyl_coordinates(u).
KakDecomposition kak(const Unitary4 &u);

WeylPoint weyl_coordinates(const Unitary4 &u);

/// Smallest t in (0, t_max] at which e^{iht} lies in the class `target`
/// (Weyl coordinates within 1e-6), or nullopt.
std::optional<double> single_switch_reach(const Hermitian4 &h,
                                          const WeylPoint &target, double t_max);

namespace gates {
Unitary4 identity();
Unitary4 cnot();   ///< control on top
Unitary4 dcnot();  ///< CNOT(top->bottom) followed by CNOT(bottom->top)
Unitary4 swap();
Unitary4 b();
/// e^{pi (i/2) sx sx}, the A1 vertex. A local gate, so it lies in the
/// same class as the identity.
Unitary4 a1();
}  // namespace gates

struct NamedGate {
  std::string name;
  Unitary4 gate;
  WeylPoint point;  ///< the tetrahedron vertex or point naming this gate
};

/// O, A1, L (CNOT), A2 (DCNOT), A3 (SWAP) and B.
const std::vector<NamedGate> &named_gates();
/// Lookup by case-insensitive name: o, a1, cnot, dcnot, swap, b.
std::optional<NamedGate> find_named_gate(std::string name);

}  // namespace twoq
