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

#include <catch_amalgamated.hpp>

#include "testutil.hpp"
#include "twoq/bsynth.hpp"

namespace twoq {
namespace test_bsynth {

using namespace twoq::test;

static const Mat4 &oracle_b() {
  static const Mat4 b = oracle_canonical(kPi / 2, kPi / 4, 0);
  return b;
}

static void check_synthesis(const Mat4 &target) {
  const BSynthesisResult r = synthesize(Unitary4::checked(target));
  REQUIRE(r.circuit.count_two_qubit() == 2);
  REQUIRE(r.circuit.count_b() == 2);
  REQUIRE(r.circuit.count_single_qubit() <= 6);
  const double d = oracle_dist(evaluate(r.circuit).matrix(), target);
  REQUIRE(d < 1e-6);
  REQUIRE(std::abs(d - r.residual) < 1e-10);
}

SCENARIO("The B gate") {
  GIVEN("Its matrix") {
    REQUIRE(oracle_dist(gates::b().matrix(), oracle_b()) < 1e-14);
  }
  GIVEN("The CNOT-based equivalent circuit") {
    const TwoQubitCircuit c = b_equivalent_circuit();
    REQUIRE(c.count_two_qubit() == 2);
    const Mat2 rx = (0.5 * i_ * (kPi / 2) * sx()).exp();
    const Mat2 p0 = (Mat2() << 1, 0, 0, 0).finished(), p1 = (Mat2() << 0, 0, 0, 1).finished();
    const Mat4 controlled = okron(id2(), p0) + okron(rx, p1);
    const Mat4 ref = controlled * oracle_cnot();
    REQUIRE(oracle_dist(evaluate(c).matrix(), ref) < 1e-14);
    const OracleInvariants g = oracle_invariants(ref);
    REQUIRE(std::abs(g.g1) < 1e-9);
    REQUIRE(std::abs(g.g2) < 1e-9);
    REQUIRE(std::abs(g.g3) < 1e-9);
  }
  GIVEN("The gate defined by its basis action") {
    REQUIRE(basis_action_check());
    const OracleInvariants g = oracle_invariants(b_basis_action_matrix().matrix());
    REQUIRE(std::abs(g.g1) + std::abs(g.g2) + std::abs(g.g3) < 1e-9);
  }
  GIVEN("Random local dressings of one B") {
    Gen g(1);
    for (int k = 0; k < 200; ++k) {
      const Mat4 u = g.local() * oracle_b() * g.local();
      const WeylPoint c = weyl_coordinates(Unitary4::checked(u));
      REQUIRE(std::abs(c.c1 - kPi / 2) < 1e-9);
      REQUIRE(std::abs(c.c2 - kPi / 4) < 1e-9);
      REQUIRE(std::abs(c.c3) < 1e-9);
    }
  }
}

SCENARIO("Closed-form middle angles") {
  GIVEN("Chamber points") {
    Gen g(2);
    for (int k = 0; k < 1000; ++k) {
      const WeylPoint c = g.chamber_point();
      const BetaPair b = beta_from_weyl(c);
      REQUIRE(b.beta1 >= 0);
      REQUIRE(b.beta1 <= kPi);
      REQUIRE(b.beta2 >= 0);
      REQUIRE(b.beta2 <= kPi / 2);
      THEN("The middle circuit has the target invariants") {
        const MiddleParams p = analytic_middle_params(c);
        const Mat4 mid = evaluate(middle_circuit(p)).matrix();
        const OracleInvariants ref = oracle_invariants(oracle_canonical(c.c1, c.c2, c.c3));
        REQUIRE(max_abs(ref, local_invariants(Unitary4::checked(mid))) < 1e-8);
        REQUIRE(max_abs(oracle_invariants(mid), two_b_circuit_invariants(p.theta_top, p.beta1, p.beta2)) < 1e-8);
      }
    }
  }
  GIVEN("Named vertices") {
    for (const WeylPoint &c : std::vector<WeylPoint>{{0, 0, 0},
                                                     {kPi / 2, 0, 0},
                                                     {kPi / 2, kPi / 2, 0},
                                                     {kPi / 2, kPi / 2, kPi / 2},
                                                     {kPi / 2, kPi / 4, 0}}) {
      const MiddleParams p = analytic_middle_params(c);
      const Mat4 mid = evaluate(middle_circuit(p)).matrix();
      REQUIRE(max_abs(oracle_invariants(oracle_canonical(c.c1, c.c2, c.c3)),
                      local_invariants(Unitary4::checked(mid))) < 1e-9);
    }
  }
  GIVEN("A point outside the chamber") {
    REQUIRE_THROWS_AS(beta_from_weyl({1.0, 0.5, 2.0}), DomainError);
  }
}

SCENARIO("Numerical middle solve") {
  Gen g(3);
  for (int k = 0; k < 50; ++k) {
    const WeylPoint c = g.chamber_point();
    const LocalInvariants target = invariants_from_weyl(c);
    MiddleParams seed{g.uniform(0, 3), g.uniform(0, 3), g.uniform(0, 1.5), MiddleBranch::solved,
                      MiddleWires::standard};
    const MiddleSolution s = solve_middle_params(target, seed);
    REQUIRE(s.residual < 1e-9);
    const Mat4 mid = evaluate(middle_circuit(s.params)).matrix();
    const OracleInvariants got = oracle_invariants(mid);
    REQUIRE(std::abs(got.g1 - target.g1) + std::abs(got.g2 - target.g2) + std::abs(got.g3 - target.g3) < 1e-8);
  }
}

SCENARIO("Synthesis") {
  GIVEN("Named gates") {
    check_synthesis(Mat4::Identity());
    check_synthesis(oracle_cnot());
    check_synthesis(oracle_swap());
    check_synthesis(oracle_b());
    check_synthesis(gates::dcnot().matrix());
  }
  GIVEN("Random unitaries with global phase") {
    Gen g(4);
    for (int k = 0; k < 300; ++k) check_synthesis(g.u4());
  }
  GIVEN("Dressed boundary classes") {
    Gen g(5);
    for (const WeylPoint &c : std::vector<WeylPoint>{{0.7, 0.7, 0.0},
                                                     {1.1, 0.4, 0.4},
                                                     {2.3, 0.5, 0.5},
                                                     {kPi / 2, 1.0, 0.0},
                                                     {0.4, 0.0, 0.0}})
      check_synthesis(g.local() * oracle_canonical(c.c1, c.c2, c.c3) * g.local());
  }
  GIVEN("Merging does not move the residual") {
    const Unitary4 u = haar_random_su4(77);
    const BSynthesisResult r = synthesize(u);
    const double before = dist_up_to_phase(evaluate(r.circuit), u);
    const double after = dist_up_to_phase(evaluate(merge_locals(r.circuit)), u);
    REQUIRE(std::abs(before - after) < 1e-10);
  }
}

}  // namespace test_bsynth
}  // namespace twoq
