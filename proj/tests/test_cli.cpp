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
#include <cstdio>
#include <fstream>
#include <sstream>

#include "testutil.hpp"
#include "twoq/circuit.hpp"
#include "twoq/cli.hpp"
#include "twoq/json_io.hpp"

namespace twoq {
namespace test_cli {

using namespace twoq::test;

struct Run {
  int code;
  std::string out, err;
};

static Run run(std::vector<std::string> args, const std::string &stdin_text = "") {
  std::istringstream in(stdin_text);
  std::ostringstream out, err;
  const int code = cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

static std::string matrix_text(const Mat4 &m) { return dump_json(matrix_to_json(m)); }

SCENARIO("invariants") {
  GIVEN("The identity on stdin") {
    const Run r = run({"invariants"}, matrix_text(Mat4::Identity()));
    REQUIRE(r.code == 0);
    const Json j = parse_json(r.out);
    REQUIRE(j["g1"].get<double>() == Catch::Approx(4));
    REQUIRE(j["g2"].get<double>() == 0);
    REQUIRE(j["g3"].get<double>() == Catch::Approx(12));
  }
  GIVEN("A file argument") {
    const std::string path = "cli_test_cnot.json";
    {
      std::ofstream f(path);
      f << matrix_text(oracle_cnot());
    }
    const Run r = run({"invariants", path});
    std::remove(path.c_str());
    REQUIRE(r.code == 0);
    const Json j = parse_json(r.out);
    REQUIRE(std::abs(j["g3"].get<double>() - 4) < 1e-12);
  }
  GIVEN("A non-unitary matrix") {
    Mat4 m = Mat4::Identity();
    m(0, 0) = 2;
    const Run r = run({"invariants"}, matrix_text(m));
    REQUIRE(r.code == 2);
    REQUIRE(parse_json(r.err)["error"] == "input");
  }
  GIVEN("A looser tolerance") {
    Mat4 m = Mat4::Identity();
    m(0, 0) = 1 + 1e-6;
    REQUIRE(run({"invariants"}, matrix_text(m)).code == 2);
    REQUIRE(run({"--tol", "1e-4", "invariants"}, matrix_text(m)).code == 0);
  }
  GIVEN("A missing file") { REQUIRE(run({"invariants", "/nonexistent/x.json"}).code == 2); }
}

SCENARIO("weyl, kak and named") {
  GIVEN("named --gate cnot") {
    const Run r = run({"named", "--gate", "cnot"});
    REQUIRE(r.code == 0);
    const Json j = parse_json(r.out);
    REQUIRE(j["name"] == "cnot");
    REQUIRE(std::abs(j["c"][0].get<double>() - kPi / 2) < 1e-12);
    REQUIRE(std::abs(j["c"][1].get<double>()) < 1e-12);
    THEN("The output feeds straight into weyl") {
      const Run w = run({"weyl"}, r.out);
      REQUIRE(w.code == 0);
      REQUIRE(parse_json(w.out)["c"] == j["c"]);
    }
  }
  GIVEN("named --gate swap piped to invariants") {
    const Run r = run({"invariants"}, run({"named", "--gate", "swap"}).out);
    const Json j = parse_json(r.out);
    REQUIRE(std::abs(j["g1"].get<double>() + 4) < 1e-12);
    REQUIRE(std::abs(j["g2"].get<double>()) < 1e-12);
    REQUIRE(std::abs(j["g3"].get<double>() + 12) < 1e-12);
  }
  GIVEN("named without a gate") {
    const Json j = parse_json(run({"named"}).out);
    REQUIRE(j["gates"].size() == 6);
  }
  GIVEN("An unknown gate") { REQUIRE(run({"named", "--gate", "nope"}).code == 2); }
  GIVEN("kak on a random matrix") {
    const Run src = run({"random", "--seed", "5"});
    const Run r = run({"kak"}, src.out);
    REQUIRE(r.code == 0);
    const Json j = parse_json(r.out);
    const Mat4 u = mat4_from_json(parse_json(src.out));
    const Mat4 k1 = okron(mat2_from_json(j["k1_top"]), mat2_from_json(j["k1_bottom"]));
    const Mat4 k2 = okron(mat2_from_json(j["k2_top"]), mat2_from_json(j["k2_bottom"]));
    const Mat4 a = oracle_canonical(j["c"][0].get<double>(), j["c"][1].get<double>(),
                                    j["c"][2].get<double>());
    REQUIRE(oracle_dist(k1 * a * k2, u) < 1e-8);
  }
}

SCENARIO("synth") {
  const Run r = run({"synth", "--report"}, matrix_text(oracle_cnot()));
  REQUIRE(r.code == 0);
  const Json j = parse_json(r.out);
  REQUIRE(j["report"]["two_qubit_gates"] == 2);
  REQUIRE(j["report"]["b_gates"] == 2);
  REQUIRE(j["report"]["residual"].get<double>() < 1e-6);
  const TwoQubitCircuit c = circuit_from_json(j);
  REQUIRE(oracle_dist(evaluate(c).matrix(), oracle_cnot()) < 1e-6);
  GIVEN("Plain output") {
    const Json plain = parse_json(run({"synth"}, matrix_text(oracle_cnot())).out);
    REQUIRE_FALSE(plain.contains("report"));
  }
  GIVEN("Pseudoqasm output") {
    const Run q = run({"synth", "--qasm"}, matrix_text(oracle_swap()));
    REQUIRE(q.out.rfind("# twoq pseudoqasm", 0) == 0);
  }
}

SCENARIO("bequiv") {
  const Json j = parse_json(run({"bequiv"}).out);
  REQUIRE(std::abs(j["invariants"]["g1"].get<double>()) < 1e-9);
  REQUIRE(std::abs(j["invariants"]["g3"].get<double>()) < 1e-9);
  REQUIRE(std::abs(j["c"][1].get<double>() - kPi / 4) < 1e-8);
}

SCENARIO("trajectory") {
  const Run r = run({"trajectory", "--alpha", "1.1", "--tmax", "2", "--steps", "5"});
  REQUIRE(r.code == 0);
  REQUIRE(r.out.rfind("t,g1,g2,g3,c1,c2,c3\n0,", 0) == 0);
  REQUIRE(std::count(r.out.begin(), r.out.end(), '\n') == 6);
  REQUIRE(run({"trajectory", "--alpha", "-1"}).code == 2);
  REQUIRE(run({"trajectory", "--steps", "1"}).code == 2);
}

SCENARIO("solve") {
  GIVEN("--target b") {
    const Run r = run({"solve", "--target", "b"});
    REQUIRE(r.code == 0);
    const Json j = parse_json(r.out);
    REQUIRE(std::abs(j["alpha"].get<double>() - 1.1436) < 1e-3);
    REQUIRE(std::abs(j["t"].get<double>() - 1.5014) < 1e-3);
    REQUIRE(j["n"] == 2);
  }
  GIVEN("--target cnot") {
    const Json j = parse_json(run({"solve", "--target", "cnot"}).out);
    REQUIRE(std::abs(j["alpha"].get<double>() - 1.1992) < 1e-3);
    REQUIRE(std::abs(j["t"].get<double>() - 2.7309) < 1e-3);
    REQUIRE(j["n"].is_null());
  }
  GIVEN("--target custom") {
    const Run r = run({"solve", "--target", "custom", "0,0,4"});
    REQUIRE(r.code == 0);
    REQUIRE(std::abs(parse_json(r.out)["t"].get<double>() - 2.7309) < 1e-3);
  }
  GIVEN("An unreachable class") {
    const Run r = run({"solve", "--target", "custom", "0,1,0"});
    REQUIRE(r.code == 3);
    const Json e = parse_json(r.err);
    REQUIRE(e["error"] == "numerical");
    REQUIRE(e.contains("best_residual"));
  }
  GIVEN("Malformed targets") {
    REQUIRE(run({"solve", "--target", "custom", "0,1"}).code == 2);
    REQUIRE(run({"solve", "--target", "zz"}).code == 2);
    REQUIRE(run({"solve", "--target", "cnot", "--alpha-range", "1"}).code == 2);
  }
}

SCENARIO("reach") {
  GIVEN("Presets") {
    const Json a = parse_json(run({"reach", "--preset", "ising", "--target", "cnot"}).out);
    REQUIRE(a["reached"] == true);
    REQUIRE(std::abs(a["t"].get<double>() - kPi / 4) < 1e-8);
    const Json b = parse_json(run({"reach", "--preset", "bxy", "--target", "b"}).out);
    REQUIRE(std::abs(b["t"].get<double>() - kPi / 8) < 1e-8);
  }
  GIVEN("A Hamiltonian on stdin and a numeric target") {
    const Mat4 h = okron(sx(), sx()) + okron(sy(), sy());
    const Run r = run({"reach", "--hamiltonian", "-", "--target", "1.5707963267948966,1.5707963267948966,0"},
                      matrix_text(h));
    REQUIRE(r.code == 0);
    REQUIRE(std::abs(parse_json(r.out)["t"].get<double>() - kPi / 4) < 1e-8);
  }
  GIVEN("An unreachable target") {
    const Json j = parse_json(run({"reach", "--preset", "ising", "--target", "b", "--tmax", "3"}).out);
    REQUIRE(j["reached"] == false);
    REQUIRE(j["t"].is_null());
  }
  GIVEN("No Hamiltonian") { REQUIRE(run({"reach", "--target", "b"}).code == 2); }
}

SCENARIO("Usage errors and help") {
  REQUIRE(run({}).code == 2);
  REQUIRE(run({"frobnicate"}).code == 2);
  REQUIRE(run({"--tol", "0", "named"}).code == 2);
  REQUIRE(run({"--tol", "-1", "named"}).code == 2);
  REQUIRE(run({"--format", "xml", "named"}).code == 2);
  const Run bad = run({"frobnicate"});
  REQUIRE(parse_json(bad.err)["error"] == "usage");
  for (const char *sub : {"invariants", "weyl", "kak", "synth", "bequiv", "trajectory", "solve",
                          "reach", "named", "random"}) {
    const Run h = run({sub, "--help"});
    INFO(sub);
    REQUIRE(h.code == 0);
    REQUIRE(h.out.find("Usage") != std::string::npos);
  }
}

SCENARIO("Text output rounds to six digits") {
  const Run r = run({"--format", "text", "named", "--gate", "cnot"});
  REQUIRE(r.code == 0);
  REQUIRE(r.out.find("c: 1.5708 ") != std::string::npos);
  REQUIRE(r.out.find("name: cnot") != std::string::npos);
}

SCENARIO("Determinism") {
  const std::vector<std::vector<std::string>> cmds = {
      {"random", "--seed", "42"},
      {"solve", "--target", "b"},
      {"trajectory", "--alpha", "0.9", "--tmax", "3", "--steps", "50"},
      {"named"}};
  for (const auto &cmd : cmds) REQUIRE(run(cmd).out == run(cmd).out);
  const std::string u = run({"random", "--seed", "42"}).out;
  REQUIRE(run({"synth", "--report"}, u).out == run({"synth", "--report"}, u).out);
  REQUIRE(run({"random", "--seed", "1"}).out != run({"random", "--seed", "2"}).out);
}

}  // namespace test_cli
}  // namespace twoq
