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

#include "twoq/circuit.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cmath>

#include "twoq/weylkak.hpp"

namespace twoq {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

Mat4 embed(Wire w, const Mat2 &u) {
  return w == Wire::top ? kron(u, Mat2::Identity()) : kron(Mat2::Identity(), u);
}

Mat4 controlled(Wire control, const Mat2 &u) {
  Mat2 p0 = Mat2::Zero(), p1 = Mat2::Zero();
  p0(0, 0) = 1;
  p1(1, 1) = 1;
  if (control == Wire::top) return kron(p0, Mat2::Identity()) + kron(p1, u);
  return kron(Mat2::Identity(), p0) + kron(u, p1);
}

Wire wire_from_json(const Json &j) {
  if (j == "top") return Wire::top;
  if (j == "bottom") return Wire::bottom;
  throw InputError("wire must be \"top\" or \"bottom\"");
}

}  // namespace

Wire other(Wire w) { return w == Wire::top ? Wire::bottom : Wire::top; }

std::string_view to_string(Wire w) { return w == Wire::top ? "top" : "bottom"; }

std::size_t TwoQubitCircuit::count_single_qubit() const {
  return std::count_if(gates_.begin(), gates_.end(), [](const GateOp &g) {
    return std::holds_alternative<SingleQubitGate>(g);
  });
}

std::size_t TwoQubitCircuit::count_two_qubit() const {
  return gates_.size() - count_single_qubit();
}

std::size_t TwoQubitCircuit::count_b() const {
  return std::count_if(gates_.begin(), gates_.end(), [](const GateOp &g) {
    const auto *two = std::get_if<TwoQubitGate>(&g);
    return two && std::holds_alternative<BGate>(two->kind);
  });
}

Unitary4 gate_matrix(const GateOp &g) {
  return std::visit(
      overloaded{
          [](const SingleQubitGate &s) { return Unitary4::trusted(embed(s.wire, s.u.matrix())); },
          [](const TwoQubitGate &t) {
            return std::visit(
                overloaded{
                    [](const BGate &) { return gates::b(); },
                    [](const CnotGate &) { return gates::cnot(); },
                    [](const ControlledGate &cg) {
                      return Unitary4::trusted(controlled(cg.control, cg.u.matrix()));
                    },
                    [](const CanonicalGate &cg) { return canonical_gate(cg.c); },
                },
                t.kind);
          },
      },
      g);
}

Unitary4 evaluate(const TwoQubitCircuit &c) {
  Mat4 acc = Mat4::Identity();
  for (const auto &g : c.gates()) acc = gate_matrix(g).matrix() * acc;
  return Unitary4::trusted(acc);
}

TwoQubitCircuit merge_locals(const TwoQubitCircuit &c) {
  TwoQubitCircuit out;
  // pending[w] holds the merged run on wire w since the last two-qubit gate
  std::optional<SingleQubitGate> pending[2];
  std::vector<Wire> first_seen;
  auto flush = [&] {
    for (Wire w : first_seen) out.add(*pending[static_cast<int>(w)]);
    pending[0].reset();
    pending[1].reset();
    first_seen.clear();
  };
  for (const auto &g : c.gates()) {
    if (const auto *s = std::get_if<SingleQubitGate>(&g)) {
      auto &slot = pending[static_cast<int>(s->wire)];
      if (!slot) {
        slot = *s;
        first_seen.push_back(s->wire);
      } else {
        slot->u = s->u * slot->u;
        slot->label.reset();
      }
    } else {
      flush();
      out.add(g);
    }
  }
  flush();
  return out;
}

Json circuit_to_json(const TwoQubitCircuit &c) {
  Json gates = Json::array();
  for (const auto &g : c.gates()) {
    Json jg;
    if (const auto *s = std::get_if<SingleQubitGate>(&g)) {
      jg["type"] = "single";
      jg["wire"] = std::string(to_string(s->wire));
      if (s->label) jg["label"] = *s->label;
      jg["u"] = matrix_to_json(s->u.matrix());
    } else {
      const auto &t = std::get<TwoQubitGate>(g);
      jg["type"] = "two";
      jg["kind"] = std::visit(
          overloaded{
              [](const BGate &) { return Json("B"); },
              [](const CnotGate &) { return Json("CNOT"); },
              [](const ControlledGate &cg) {
                Json inner;
                inner["control"] = std::string(to_string(cg.control));
                inner["u"] = matrix_to_json(cg.u.matrix());
                Json k;
                k["controlled"] = std::move(inner);
                return k;
              },
              [](const CanonicalGate &cg) {
                Json k;
                k["canonical"] = Json::array({cg.c.c1, cg.c.c2, cg.c.c3});
                return k;
              },
          },
          t.kind);
    }
    gates.push_back(std::move(jg));
  }
  Json out;
  out["gates"] = std::move(gates);
  return out;
}

TwoQubitCircuit circuit_from_json(const Json &j) {
  if (!j.is_object() || !j.contains("gates") || !j["gates"].is_array())
    throw InputError("circuit JSON needs a \"gates\" array");
  TwoQubitCircuit out;
  for (const auto &jg : j["gates"]) {
    if (!jg.is_object() || !jg.contains("type")) throw InputError("gate needs a \"type\"");
    const auto &type = jg["type"];
    if (type == "single") {
      if (!jg.contains("wire") || !jg.contains("u"))
        throw InputError("single-qubit gate needs \"wire\" and \"u\"");
      std::optional<std::string> label;
      if (jg.contains("label") && !jg["label"].is_null()) {
        if (!jg["label"].is_string()) throw InputError("gate label must be a string");
        label = jg["label"].get<std::string>();
      }
      out.single(wire_from_json(jg["wire"]), unitary2_from_json(jg["u"]), std::move(label));
    } else if (type == "two") {
      if (!jg.contains("kind")) throw InputError("two-qubit gate needs a \"kind\"");
      const auto &kind = jg["kind"];
      if (kind == "B") {
        out.two(BGate{});
      } else if (kind == "CNOT") {
        out.two(CnotGate{});
      } else if (kind.is_object() && kind.contains("controlled")) {
        const auto &inner = kind["controlled"];
        if (!inner.is_object() || !inner.contains("control") || !inner.contains("u"))
          throw InputError("controlled gate needs \"control\" and \"u\"");
        out.two(ControlledGate{wire_from_json(inner["control"]), unitary2_from_json(inner["u"])});
      } else if (kind.is_object() && kind.contains("canonical")) {
        const auto &c = kind["canonical"];
        if (!c.is_array() || c.size() != 3 || !c[0].is_number() || !c[1].is_number() ||
            !c[2].is_number())
          throw InputError("canonical gate needs three numbers");
        out.two(CanonicalGate{{c[0].get<double>(), c[1].get<double>(), c[2].get<double>()}});
      } else {
        throw InputError("unknown two-qubit gate kind: " + kind.dump());
      }
    } else {
      throw InputError("unknown gate type: " + type.dump());
    }
  }
  return out;
}

std::string serialize(const TwoQubitCircuit &c) { return dump_json(circuit_to_json(c)); }

TwoQubitCircuit parse_circuit(std::string_view text) {
  return circuit_from_json(parse_json(text));
}

namespace {

std::string num(double x) { return fmt::format("{:.6g}", std::abs(x) < 5e-13 ? 0.0 : x); }

// u = e^{i phi} e^{i theta/2 n.sigma}
std::string describe_single(const Mat2 &u) {
  const double phi = std::arg(u.determinant()) / 2;
  const Mat2 w = std::exp(-kI * phi) * u;
  const double a = (w.trace() / 2.0).real();
  const Eigen::Vector3d b((w * pauli::x()).trace().imag() / 2,
                          (w * pauli::y()).trace().imag() / 2,
                          (w * pauli::z()).trace().imag() / 2);
  const double bn = b.norm();
  if (bn < 1e-12) return "id";
  const double theta = 2 * std::atan2(bn, a);
  const Eigen::Vector3d n = b / bn;
  static const char *names[3] = {"rx", "ry", "rz"};
  for (int k = 0; k < 3; ++k)
    if (std::abs(std::abs(n(k)) - 1) < 1e-12)
      return fmt::format("{}({})", names[k], num(n(k) > 0 ? theta : -theta));
  return fmt::format("rot({}; {}, {}, {})", num(theta), num(n(0)), num(n(1)), num(n(2)));
}

}  // namespace

std::string to_pseudoqasm(const TwoQubitCircuit &c) {
  std::string out = "# twoq pseudoqasm\nwires top,bottom\n";
  for (const auto &g : c.gates()) {
    if (const auto *s = std::get_if<SingleQubitGate>(&g)) {
      out += fmt::format("{} {}", describe_single(s->u.matrix()), to_string(s->wire));
      if (s->label) out += fmt::format("  # {}", *s->label);
      out += '\n';
      continue;
    }
    const auto &t = std::get<TwoQubitGate>(g);
    out += std::visit(
        overloaded{
            [](const BGate &) { return std::string("b top,bottom\n"); },
            [](const CnotGate &) { return std::string("cnot top,bottom\n"); },
            [](const ControlledGate &cg) {
              return fmt::format("c-{} {},{}\n", describe_single(cg.u.matrix()),
                                 to_string(cg.control), to_string(other(cg.control)));
            },
            [](const CanonicalGate &cg) {
              return fmt::format("can({}, {}, {}) top,bottom\n", num(cg.c.c1), num(cg.c.c2),
                                 num(cg.c.c3));
            },
        },
        t.kind);
  }
  return out;
}

}  // namespace twoq
