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

// Synthesis of arbitrary two-qubit gates from two B gates.
//
// Every two-qubit unitary is locally equivalent to
//
//   B . (e^{theta (i/2) sy} (x) e^{b2 (i/2) sz} e^{b1 (i/2) sy} e^{b2 (i/2) sz}) . B
//
// for suitable (theta, b1, b2), so surrounding this middle circuit with one
// local layer on each side reproduces any target with two B gates and six
// single-qubit gates.

#pragma once

#include <cstdint>

#include "twoq/circuit.hpp"
#include "twoq/invariants.hpp"
#include "twoq/weylkak.hpp"

namespace twoq {

struct BetaPair {
  double beta1 = 0;  ///< in [0, pi]
  double beta2 = 0;  ///< in [0, pi/2]
};

/// Closed-form middle-layer angles for a chamber point c:
///   cos b1 = 1 - 4 sin^2(c2/2) cos^2(c3/2)
///   sin b2 = sqrt(cos c2 cos c3 / (1 - 2 sin^2(c2/2) cos^2(c3/2)))
/// Throws DomainError when the square-root argument leaves [0, 1] by more
/// than 1e-12, which only happens for points outside the chamber. At the
/// DCNOT vertex the ratio is 0/0; any b2 works there because b1 = pi, and
/// b2 = pi/2 is returned.
BetaPair beta_from_weyl(const WeylPoint &c);

enum class MiddleBranch { analytic, solved };
/// Which wire carries the y rotation.
enum class MiddleWires { standard, swapped };

struct MiddleParams {
  double theta_top = 0;
  double beta1 = 0;
  double beta2 = 0;
  MiddleBranch branch = MiddleBranch::analytic;
  MiddleWires wires = MiddleWires::standard;
};

/// The middle-layer parameters used for a target in the chamber:
/// theta_top = c1 and (b1, b2) from beta_from_weyl().
MiddleParams analytic_middle_params(const WeylPoint &c);

/// [B, y rotation, z-y-z composite, B] in application order. With
/// MiddleWires::standard the y rotation sits on the top wire.
TwoQubitCircuit middle_circuit(const MiddleParams &p);

struct MiddleSolution {
  MiddleParams params;
  double residual = 0;  ///< Euclidean invariant mismatch
  int newton_steps = 0;
};

/// Damped-Newton search for middle parameters whose circuit has invariants
/// `target`. Starts from `seed`, then from its sign/branch images
/// (b1 -> -b1, b2 -> pi - b2, theta -> -theta), then from the same set with
/// the wires swapped. Throws ConvergenceError with the best residual when
/// no start reaches 1e-9.
MiddleSolution solve_middle_params(const LocalInvariants &target, const MiddleParams &seed);

struct BSynthesisResult {
  TwoQubitCircuit circuit;
  double residual = 0;  ///< dist_up_to_phase(evaluate(circuit), target)
  bool used_fallback = false;
  MiddleParams middle;
  WeylPoint c;
};

/// Two B gates and at most six single-qubit gates reproducing u up to a
/// global phase. Uses the closed-form middle layer and falls back to
/// solve_middle_params() only when the closed form leaves a residual above
/// 1e-8.
BSynthesisResult synthesize(const Unitary4 &u);

/// CNOT (control top) followed by a controlled e^{(pi/4) i sx} with the
/// control on the bottom wire.
TwoQubitCircuit b_equivalent_circuit();

/// The gate |m>|n> -> e^{(pi/4) i sx (m xor n)} |m> |m xor n>, built column
/// by column.
Unitary4 b_basis_action_matrix();

/// Whether b_basis_action_matrix() is locally equivalent to B.
bool basis_action_check();

}  // namespace twoq
