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

#include "twoq/cli.hpp"

#include <fmt/format.h>

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include "twoq/bsynth.hpp"
#include "twoq/circuit.hpp"
#include "twoq/errors.hpp"
#include "twoq/invariants.hpp"
#include "twoq/josephson.hpp"
#include "twoq/json_io.hpp"
#include "twoq/weylkak.hpp"

namespace twoq::cli {

namespace {

enum class Format { json, text };

struct Options {
  double tol = kInputUnitaryTol;
  Format format = Format::json;
};

std::string read_source(const std::string &path, std::istream &in) {
  std::ostringstream ss;
  if (path == "-") {
    ss << in.rdbuf();
  } else {
    std::ifstream f(path);
    if (!f) throw InputError("cannot open " + path);
    ss << f.rdbuf();
  }
  return ss.str();
}

Unitary4 read_unitary(const std::string &path, std::istream &in, const Options &opt) {
  return unitary4_from_json(parse_json(read_source(path, in)), opt.tol);
}

Json weyl_json(const WeylPoint &c) { return Json::array({c.c1, c.c2, c.c3}); }

Json invariants_json(const LocalInvariants &g) {
  Json j = Json::object();
  j["g1"] = g.g1;
  j["g2"] = g.g2;
  j["g3"] = g.g3;
  return j;
}

// Human-readable rendering: one `key: value` line per leaf, numbers
// rounded to 6 significant digits.
void render_text(const Json &j, const std::string &prefix, std::ostream &os) {
  auto scalar = [](const Json &v) -> std::string {
    if (v.is_number_float()) return fmt::format("{:.6g}", v.get<double>());
    if (v.is_string()) return v.get<std::string>();
    return v.dump();
  };
  if (j.is_object()) {
    for (const auto &[k, v] : j.items())
      render_text(v, prefix.empty() ? k : prefix + "." + k, os);
    return;
  }
  if (j.is_array() && std::all_of(j.begin(), j.end(), [](const Json &v) {
        return v.is_primitive();
      })) {
    os << prefix << ":";
    for (const auto &v : j) os << ' ' << scalar(v);
    os << '\n';
    return;
  }
  if (j.is_array()) {
    for (std::size_t i = 0; i < j.size(); ++i)
      render_text(j[i], prefix + "[" + std::to_string(i) + "]", os);
    return;
  }
  os << prefix << ": " << scalar(j) << '\n';
}

void emit(const Json &j, const Options &opt, std::ostream &out) {
  if (opt.format == Format::json) {
    out << dump_json(j) << '\n';
  } else {
    render_text(j, "", out);
  }
}

std::vector<double> parse_list(const std::string &s, std::size_t n, const std::string &what) {
  std::vector<double> v;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      v.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception &) {
      throw InputError(what + ": '" + item + "' is not a number");
    }
  }
  if (v.size() != n)
    throw InputError(what + " needs " + std::to_string(n) + " comma-separated numbers");
  return v;
}

Json reach_json(const josephson::ReachSolution &s) {
  Json j = Json::object();
  j["alpha"] = s.alpha;
  j["t"] = s.t;
  j["n"] = s.n ? Json(*s.n) : Json(nullptr);
  j["residual"] = s.residual;
  j["beyond_feasible_alpha"] = s.beyond_feasible_alpha;
  return j;
}

Json error_json(std::string_view kind, const std::string &message) {
  Json j = Json::object();
  j["error"] = kind;
  j["message"] = message;
  return j;
}

Hermitian4 preset_hamiltonian(const std::string &name) {
  const Mat4 xx = pauli::pair(Axis::x), yy = pauli::pair(Axis::y);
  if (name == "ising") return Hermitian4::checked(xx);
  if (name == "xy") return Hermitian4::checked(xx + yy);
  if (name == "bxy") return Hermitian4::checked(2 * xx + yy);
  throw InputError("unknown preset '" + name + "' (expected ising, xy or bxy)");
}

}  // namespace

int run(const std::vector<std::string> &args, std::istream &in, std::ostream &out,
        std::ostream &err) {
  CLI::App app{"Two-qubit gate analysis and synthesis", "twoq"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opt;
  std::string format = "json";
  app.add_option("--tol", opt.tol, "Unitarity tolerance for input matrices")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();

  std::string input = "-";
  auto add_input = [&input](CLI::App *sub) {
    sub->add_option("input", input, "Matrix JSON file, '-' for stdin")->capture_default_str();
  };

  auto *inv = app.add_subcommand("invariants", "Local invariants {g1, g2, g3} of a 4x4 unitary");
  add_input(inv);
  auto *weyl = app.add_subcommand("weyl", "Weyl chamber coordinates {c: [c1, c2, c3]}");
  add_input(weyl);
  auto *kakc = app.add_subcommand("kak", "KAK decomposition: phase, local factors and c");
  add_input(kakc);

  auto *synth = app.add_subcommand("synth", "Circuit with two B gates reproducing the input");
  add_input(synth);
  bool report = false, qasm = false;
  synth->add_flag("--report", report, "Add residual, gate counts and used_fallback");
  synth->add_flag("--qasm", qasm, "Emit the pseudoqasm text form instead of JSON");

  auto *bequiv = app.add_subcommand("bequiv", "The CNOT-based circuit equivalent to B");

  auto *traj = app.add_subcommand("trajectory", "Sampled invariants of the coupled-qubit evolution as CSV");
  double alpha = 1, tmax = 5;
  int steps = 200;
  std::string out_path = "-";
  traj->add_option("--alpha", alpha, "E_J / E_L")->check(CLI::PositiveNumber)->capture_default_str();
  traj->add_option("--tmax", tmax, "Final time in units of 1/E_L")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  traj->add_option("--steps", steps, "Number of samples (>= 2)")
      ->check(CLI::Range(2, 10000000))
      ->capture_default_str();
  traj->add_option("--out", out_path, "CSV path, '-' for stdout")->capture_default_str();

  auto *solve = app.add_subcommand("solve", "Minimum-time (alpha, t) generating a target class");
  std::vector<std::string> target;
  int nmax = 10;
  std::string alpha_range = "0.05,5", t_range = "0,5";
  solve->add_option("--target", target, "b | cnot | custom g1,g2,g3")
      ->required()
      ->expected(1, 2);
  solve->add_option("--nmax", nmax, "Highest branch index for --target b")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  solve->add_option("--alpha-range", alpha_range, "lo,hi search interval for alpha")
      ->capture_default_str();
  solve->add_option("--t-range", t_range, "lo,hi search interval for t")->capture_default_str();

  auto *reach = app.add_subcommand("reach", "First time a fixed Hamiltonian reaches a Weyl point");
  std::string preset, ham_path, reach_target;
  double reach_tmax = 1;
  auto *preset_opt = reach->add_option("--preset", preset, "ising (xx), xy (xx+yy) or bxy (2xx+yy)");
  reach->add_option("--hamiltonian", ham_path, "4x4 Hermitian matrix JSON, '-' for stdin")
      ->excludes(preset_opt);
  reach->add_option("--target", reach_target, "c1,c2,c3 or a named gate")->required();
  reach->add_option("--tmax", reach_tmax, "Search horizon")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  auto *named = app.add_subcommand("named", "Named gates as matrix JSON with their coordinates");
  std::string gate_name;
  named->add_option("--gate", gate_name, "o, a1, cnot, dcnot, swap or b; omit to list all");

  auto *random = app.add_subcommand("random", "Haar-random SU(4) element as matrix JSON");
  std::uint64_t seed = 0;
  random->add_option("--seed", seed, "RNG seed")->capture_default_str();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError &e) {
    if (e.get_exit_code() == 0) return app.exit(e, out, err);
    err << dump_json(error_json("usage", e.what())) << '\n';
    return kExitUsage;
  }
  opt.format = format == "text" ? Format::text : Format::json;

  try {
    if (inv->parsed()) {
      emit(invariants_json(local_invariants(read_unitary(input, in, opt))), opt, out);
    } else if (weyl->parsed()) {
      Json j = Json::object();
      j["c"] = weyl_json(weyl_coordinates(read_unitary(input, in, opt)));
      emit(j, opt, out);
    } else if (kakc->parsed()) {
      const KakDecomposition d = kak(read_unitary(input, in, opt));
      Json j = Json::object();
      j["phase"] = d.phase;
      j["k1_top"] = matrix_to_json(d.k1_top.matrix());
      j["k1_bottom"] = matrix_to_json(d.k1_bottom.matrix());
      j["k2_top"] = matrix_to_json(d.k2_top.matrix());
      j["k2_bottom"] = matrix_to_json(d.k2_bottom.matrix());
      j["c"] = weyl_json(d.c);
      emit(j, opt, out);
    } else if (synth->parsed()) {
      const BSynthesisResult r = synthesize(read_unitary(input, in, opt));
      if (qasm) {
        out << to_pseudoqasm(r.circuit);
      } else {
        Json j = circuit_to_json(r.circuit);
        if (report) {
          Json rep = Json::object();
          rep["residual"] = r.residual;
          rep["two_qubit_gates"] = r.circuit.count_two_qubit();
          rep["b_gates"] = r.circuit.count_b();
          rep["single_qubit_gates"] = r.circuit.count_single_qubit();
          rep["used_fallback"] = r.used_fallback;
          rep["c"] = weyl_json(r.c);
          j["report"] = std::move(rep);
        }
        emit(j, opt, out);
      }
    } else if (bequiv->parsed()) {
      const TwoQubitCircuit c = b_equivalent_circuit();
      const Unitary4 u = evaluate(c);
      Json j = Json::object();
      j["circuit"] = circuit_to_json(c);
      j["invariants"] = invariants_json(local_invariants(u));
      j["c"] = weyl_json(weyl_coordinates(u));
      emit(j, opt, out);
    } else if (traj->parsed()) {
      const auto samples = josephson::trajectory({alpha}, tmax, steps);
      if (out_path == "-") {
        josephson::write_trajectory_csv(out, samples);
      } else {
        std::ofstream f(out_path);
        if (!f) throw InputError("cannot write " + out_path);
        josephson::write_trajectory_csv(f, samples);
      }
    } else if (solve->parsed()) {
      const auto ar = parse_list(alpha_range, 2, "--alpha-range");
      const auto tr = parse_list(t_range, 2, "--t-range");
      const std::string kind = target.front();
      josephson::ReachSolution s;
      if (kind == "b") {
        if (target.size() != 1) throw InputError("--target b takes no values");
        s = josephson::min_time_b_solution(nmax);
      } else if (kind == "cnot") {
        if (target.size() != 1) throw InputError("--target cnot takes no values");
        s = josephson::solve_target_class({0, 0, 4}, {ar[0], ar[1]}, {tr[0], tr[1]},
                                          josephson::TargetTag::cnot);
      } else if (kind == "custom") {
        if (target.size() != 2) throw InputError("--target custom needs g1,g2,g3");
        const auto g = parse_list(target[1], 3, "--target custom");
        s = josephson::solve_target_class({g[0], g[1], g[2]}, {ar[0], ar[1]}, {tr[0], tr[1]});
      } else {
        throw InputError("unknown target '" + kind + "' (expected b, cnot or custom)");
      }
      emit(reach_json(s), opt, out);
    } else if (reach->parsed()) {
      Hermitian4 h = Hermitian4::checked(Mat4::Zero());
      if (!ham_path.empty()) {
        h = Hermitian4::checked(mat4_from_json(parse_json(read_source(ham_path, in))));
      } else if (!preset.empty()) {
        h = preset_hamiltonian(preset);
      } else {
        throw InputError("reach needs --preset or --hamiltonian");
      }
      WeylPoint c;
      if (auto g = find_named_gate(reach_target)) {
        c = weyl_coordinates(g->gate);
      } else {
        const auto v = parse_list(reach_target, 3, "--target");
        c = {v[0], v[1], v[2]};
      }
      const auto t = single_switch_reach(h, c, reach_tmax);
      Json j = Json::object();
      j["reached"] = t.has_value();
      j["t"] = t ? Json(*t) : Json(nullptr);
      j["target"] = weyl_json(c);
      emit(j, opt, out);
    } else if (named->parsed()) {
      if (gate_name.empty()) {
        Json list = Json::array();
        for (const auto &g : named_gates()) {
          Json e = Json::object();
          e["name"] = g.name;
          e["vertex"] = weyl_json(g.point);
          e["c"] = weyl_json(weyl_coordinates(g.gate));
          list.push_back(std::move(e));
        }
        Json j = Json::object();
        j["gates"] = std::move(list);
        emit(j, opt, out);
      } else {
        const auto g = find_named_gate(gate_name);
        if (!g) throw InputError("unknown gate '" + gate_name + "'");
        Json j = matrix_to_json(g->gate.matrix());
        j["name"] = g->name;
        j["vertex"] = weyl_json(g->point);
        j["c"] = weyl_json(weyl_coordinates(g->gate));
        emit(j, opt, out);
      }
    } else if (random->parsed()) {
      emit(matrix_to_json(haar_random_su4(seed).matrix()), opt, out);
    }
  } catch (const InputError &e) {
    err << dump_json(error_json("input", e.what())) << '\n';
    return kExitUsage;
  } catch (const DomainError &e) {
    err << dump_json(error_json("input", e.what())) << '\n';
    return kExitUsage;
  } catch (const ConvergenceError &e) {
    Json j = error_json("numerical", e.what());
    j["best_residual"] = e.best_residual();
    err << dump_json(j) << '\n';
    return kExitNumerical;
  } catch (const Error &e) {
    err << dump_json(error_json("numerical", e.what())) << '\n';
    return kExitNumerical;
  }
  return kExitOk;
}

}  // namespace twoq::cli
