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

// Inductively coupled charge qubits:
//
//   H = -(alpha/2) (sx (x) I + I (x) sx) + alpha^2 (sy (x) sy)
//
// in units where E_L = 1 and hbar = 1 (so E_J = alpha and time is measured
// in 1/E_L). One uninterrupted application U = e^{iHt} stays on the base
// of the Weyl chamber (g2 = 0, c3 = 0).

#pragma once

#include <optional>
#include <ostream>
#include <vector>

#include "twoq/invariants.hpp"
#include "twoq/matcore.hpp"

namespace twoq::josephson {

struct Params {
  double alpha = 1;  ///< E_J / E_L, must be positive
};

/// Above this alpha the coupling is outside the range usually considered
/// buildable; solutions there carry a warning flag.
inline constexpr double kFeasibleAlpha = 1.25;

/// x = cos(alpha^2 t), y = cos(sqrt(alpha^2 + 1) alpha t).
struct TrigPair {
  double x = 1, y = 1;
};
TrigPair trig_pair(const Params &p, double t);

Hermitian4 hamiltonian(const Params &p);

/// Closed-form trace invariants of e^{iHt}: tr m is real and
///   tr m = 4/(1+a^2) (a^2 (x^2 + y^2 - 1) + x^2)
///   g3   = 4/(1+a^2) (3a^2 - 1 - 4y^2 a^2 + 8a^2 x^2 y^2 + 4x^2 - 4x^2 a^2)
TraceInvariants closed_form_trace_invariants(const Params &p, double t);

/// closed_form_trace_invariants() in the LocalInvariants convention.
LocalInvariants invariants_closed_form(const Params &p, double t);

/// local_invariants(exp_i_hermitian(hamiltonian(p), t)).
LocalInvariants evolve_invariants(const Params &p, double t);

struct TrajectorySample {
  double t = 0;
  LocalInvariants inv;
  WeylPoint c;
};

/// `steps` samples on a uniform grid over [0, t_max].
std::vector<TrajectorySample> trajectory(const Params &p, double t_max, int steps);

/// CSV with header t,g1,g2,g3,c1,c2,c3. Time is in units of 1/E_L.
void write_trajectory_csv(std::ostream &os, const std::vector<TrajectorySample> &samples);

enum class TargetTag { b, cnot, custom };

struct ReachSolution {
  double alpha = 0;
  double t = 0;
  /// For B solutions, the branch with t = (2n+1) pi / (8 alpha^2).
  std::optional<int> n;
  TargetTag tag = TargetTag::custom;
  /// Max-abs invariant mismatch of the closed form at (alpha, t).
  double residual = 0;
  bool beyond_feasible_alpha = false;
};

/// All B-gate solutions on branches n = 0..n_max: alpha roots of
///   sin^2(sqrt(1 + 1/alpha^2) (2n+1) pi/8) = (1 + alpha^2)/alpha^2 cos^2((2n+1) pi/8)
/// found by sign changes on a log grid over alpha in [0.05, 20] and refined
/// by bisection. Sorted by (n, alpha).
std::vector<ReachSolution> solve_b_branches(int n_max);

/// The minimum-time entry of solve_b_branches(n_max). Throws
/// ConvergenceError if there is none.
ReachSolution min_time_b_solution(int n_max);

struct Interval {
  double lo = 0, hi = 0;
};

/// Minimum-time (alpha, t) in the box whose closed-form invariants equal
/// `target` within 1e-6. Grid scan followed by a 2-D damped Newton polish.
/// Equal times (within 1e-9) resolve to the smaller alpha. Throws
/// ConvergenceError carrying the best residual seen when the box holds no
/// solution.
ReachSolution solve_target_class(const LocalInvariants &target, Interval alpha_range,
                                 Interval t_range, TargetTag tag = TargetTag::custom);

}  // namespace twoq::josephson
