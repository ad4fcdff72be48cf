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
#include "twoq/weylkak.hpp"

namespace twoq {
namespace test_weylkak {

using namespace twoq::test;

static void require_point(const WeylPoint &c, double c1, double c2, double c3, double tol) {
  INFO("c = [" << c.c1 << ", " << c.c2 << ", " << c.c3 << "]");
  REQUIRE(std::abs(c.c1 - c1) < tol);
  REQUIRE(std::abs(c.c2 - c2) < tol);
  REQUIRE(std::abs(c.c3 - c3) < tol);
}

static void check_kak(const Unitary4 &u) {
  const KakDecomposition d = kak(u);
  REQUIRE(oracle_dist(d.reconstruct().matrix(), u.matrix()) < 1e-8);
  REQUIRE(in_weyl_chamber(d.c));
  REQUIRE(std::abs(d.k1_top.det() - 1.0) < 1e-10);
  REQUIRE(std::abs(d.k2_bottom.det() - 1.0) < 1e-10);
  const Complex k00 = d.k1_top(0, 0);
  REQUIRE((k00.real() > 0 || (k00.real() == 0 && k00.imag() >= 0)));
}

SCENARIO("canonical_gate matches the matrix exponential") {
  Gen g(1);
  for (int k = 0; k < 100; ++k) {
    const WeylPoint c{g.uniform(-4, 4), g.uniform(-4, 4), g.uniform(-4, 4)};
    REQUIRE((canonical_gate(c).matrix() - oracle_canonical(c.c1, c.c2, c.c3)).norm() < 1e-12);
  }
}

SCENARIO("Named gates sit at their vertices") {
  GIVEN("CNOT") {
    require_point(weyl_coordinates(Unitary4::checked(oracle_cnot())), kPi / 2, 0, 0, 1e-9);
  }
  GIVEN("SWAP") {
    require_point(weyl_coordinates(Unitary4::checked(oracle_swap())), kPi / 2, kPi / 2, kPi / 2,
                  1e-9);
  }
  GIVEN("DCNOT") {
    Mat4 cnot_rev = Mat4::Zero();
    cnot_rev(0, 0) = cnot_rev(3, 1) = cnot_rev(2, 2) = cnot_rev(1, 3) = 1;
    const Mat4 dcnot = cnot_rev * oracle_cnot();
    require_point(weyl_coordinates(Unitary4::checked(dcnot)), kPi / 2, kPi / 2, 0, 1e-9);
    REQUIRE(oracle_dist(gates::dcnot().matrix(), dcnot) < 1e-12);
  }
  GIVEN("B") { require_point(weyl_coordinates(gates::b()), kPi / 2, kPi / 4, 0, 1e-9); }
  GIVEN("The identity") {
    const KakDecomposition d = kak(Unitary4::identity());
    require_point(d.c, 0, 0, 0, 1e-12);
    REQUIRE(oracle_dist(kron(d.k1_top, d.k1_bottom).matrix(), Mat4::Identity()) < 1e-12);
    REQUIRE(oracle_dist(kron(d.k2_top, d.k2_bottom).matrix(), Mat4::Identity()) < 1e-12);
  }
  GIVEN("The A1 vertex") {
    // A1 = exp(i pi/2 XX) = i XX is local, so it belongs to the class of O.
    const Unitary4 a1 = gates::a1();
    REQUIRE(oracle_dist(a1.matrix(), okron(sx(), sx())) < 1e-12);
    require_point(weyl_coordinates(a1), 0, 0, 0, 1e-9);
  }
  GIVEN("The lookup table") {
    for (const auto &ng : named_gates()) {
      REQUIRE(find_named_gate(ng.name).has_value());
      REQUIRE(in_weyl_chamber(ng.point));
    }
    REQUIRE(find_named_gate("CNOT")->name == "cnot");
    REQUIRE(find_named_gate("L")->name == "cnot");
    REQUIRE(find_named_gate("identity")->name == "o");
    REQUIRE_FALSE(find_named_gate("toffoli").has_value());
  }
}

SCENARIO("Chamber predicate") {
  REQUIRE(in_weyl_chamber({kPi / 2, kPi / 4, 0}));
  REQUIRE(in_weyl_chamber({kPi, 0, 0}));
  REQUIRE_FALSE(in_weyl_chamber({kPi / 2, kPi / 4, kPi / 3}));
  REQUIRE_FALSE(in_weyl_chamber({3, 0.5, 0}));
  REQUIRE_FALSE(in_weyl_chamber({1, 0.5, -0.1}));
}

SCENARIO("KAK of known constructions") {
  Gen g(2);
  GIVEN("Dressed canonical gates with chamber coordinates") {
    for (int k = 0; k < 500; ++k) {
      WeylPoint c = g.chamber_point();
      const Mat4 u = g.local() * oracle_canonical(c.c1, c.c2, c.c3) * g.local();
      const KakDecomposition d = kak(Unitary4::checked(u));
      REQUIRE(oracle_dist(d.reconstruct().matrix(), u) < 1e-8);
      require_point(d.c, c.c1, c.c2, c.c3, 1e-7);
    }
  }
  GIVEN("Degenerate and boundary points") {
    const std::vector<WeylPoint> pts = {
        {0, 0, 0},          {kPi / 2, 0, 0},       {kPi / 2, kPi / 2, 0}, {kPi / 2, kPi / 2, kPi / 2},
        {kPi / 4, kPi / 4, kPi / 4}, {3 * kPi / 4, kPi / 4, kPi / 4}, {0.3, 0.3, 0}, {1.0, 0.5, 0.5},
        {2.0, 1.0, 0.0 + 1e-3}, {kPi / 2, kPi / 4, 0}};
    for (const auto &c : pts) {
      const Mat4 u = g.local() * oracle_canonical(c.c1, c.c2, c.c3) * g.local();
      check_kak(Unitary4::checked(u));
      const WeylPoint w = weyl_coordinates(Unitary4::checked(u));
      REQUIRE(max_abs(oracle_invariants(canonical_gate(w).matrix()), local_invariants(Unitary4::checked(u))) < 1e-8);
    }
  }
  GIVEN("Base-plane points past the midline fold back") {
    const Mat4 u = oracle_canonical(2.5, 0.3, 0);
    require_point(weyl_coordinates(Unitary4::checked(u)), kPi - 2.5, 0.3, 0, 1e-9);
  }
}

SCENARIO("KAK round trip on Haar samples") {
  Gen g(3);
  for (std::uint64_t s = 0; s < 1000; ++s) {
    const Unitary4 u = haar_random_su4(s);
    check_kak(u);
    const WeylPoint c = weyl_coordinates(u);
    const Unitary4 dressed = Unitary4::checked(g.local() * u.matrix() * g.local());
    REQUIRE(weyl_coordinates(dressed).max_abs_diff(c) < 1e-7);
    REQUIRE(locally_equivalent(u, canonical_gate(c)));
  }
  GIVEN("Inputs with a global phase") {
    for (int k = 0; k < 200; ++k) check_kak(Unitary4::checked(g.u4()));
  }
}

SCENARIO("Single-switch reach") {
  const Mat4 xx = okron(sx(), sx()), yy = okron(sy(), sy());
  GIVEN("An Ising coupling") {
    const auto t = single_switch_reach(Hermitian4::checked(xx), {kPi / 2, 0, 0}, 1.0);
    REQUIRE(t.has_value());
    REQUIRE(std::abs(*t - kPi / 4) < 1e-8);
  }
  GIVEN("An XY coupling") {
    const auto t = single_switch_reach(Hermitian4::checked(xx + yy), {kPi / 2, kPi / 2, 0}, 1.0);
    REQUIRE(t.has_value());
    REQUIRE(std::abs(*t - kPi / 4) < 1e-8);
  }
  GIVEN("2 XX + YY") {
    const auto t = single_switch_reach(Hermitian4::checked(2 * xx + yy), {kPi / 2, kPi / 4, 0}, 1.0);
    REQUIRE(t.has_value());
    REQUIRE(std::abs(*t - kPi / 8) < 1e-8);
  }
  GIVEN("A target off the trajectory") {
    REQUIRE_FALSE(single_switch_reach(Hermitian4::checked(xx), {kPi / 2, kPi / 4, 0}, 5.0));
  }
  GIVEN("A horizon too short") {
    REQUIRE_FALSE(single_switch_reach(Hermitian4::checked(xx), {kPi / 2, 0, 0}, 0.5));
  }
}

}  // namespace test_weylkak
}  // namespace twoq
