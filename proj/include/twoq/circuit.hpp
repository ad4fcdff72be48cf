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
#include <string_view>
#include <variant>
#include <vector>

#include "twoq/invariants.hpp"
#include "twoq/json_io.hpp"
#include "twoq/matcore.hpp"

namespace twoq {

/// The top wire is qubit 1 and the left Kronecker factor.
enum class Wire { top, bottom };

Wire other(Wire w);
std::string_view to_string(Wire w);

struct SingleQubitGate {
  Wire wire;
  Unitary2 u;
  std::optional<std::string> label;
};

struct BGate {};
/// Control on the top wire.
struct CnotGate {};
struct ControlledGate {
  Wire control;
  Unitary2 u;  ///< acts on the other wire
};
struct CanonicalGate {
  WeylPoint c;  ///< stored as given, not canonicalized
};

using TwoQubitKind = std::variant<BGate, CnotGate, ControlledGate, CanonicalGate>;

struct TwoQubitGate {
  TwoQubitKind kind;
};

using GateOp = std::variant<SingleQubitGate, TwoQubitGate>;

/// Gates in application order: gates()[0] acts first.
class TwoQubitCircuit {
 public:
  TwoQubitCircuit() = default;
  explicit TwoQubitCircuit(std::vector<GateOp> gates) : gates_(std::move(gates)) {}

  TwoQubitCircuit &add(GateOp g) {
    gates_.push_back(std::move(g));
    return *this;
  }
  TwoQubitCircuit &single(Wire w, const Unitary2 &u,
                          std::optional<std::string> label = std::nullopt) {
    return add(SingleQubitGate{w, u, std::move(label)});
  }
  TwoQubitCircuit &two(TwoQubitKind k) { return add(TwoQubitGate{std::move(k)}); }

  const std::vector<GateOp> &gates() const { return gates_; }
  std::size_t size() const { return gates_.size(); }
  std::size_t count_single_qubit() const;
  std::size_t count_two_qubit() const;
  /// Number of two-qubit gates that are B gates.
  std::size_t count_b() const;

 private:
  std::vector<GateOp> gates_;
};

Unitary4 gate_matrix(const GateOp &g);

/// Product of the gate matrices, first gate rightmost.
Unitary4 evaluate(const TwoQubitCircuit &c);

/// Multiplies runs of single-qubit gates on the same wire that are not
/// separated by a two-qubit gate.
TwoQubitCircuit merge_locals(const TwoQubitCircuit &c);

Json circuit_to_json(const TwoQubitCircuit &c);
/// Throws InputError for malformed input, unknown gate kinds, or embedded
/// matrices that are not unitary.
TwoQubitCircuit circuit_from_json(const Json &j);

std::string serialize(const TwoQubitCircuit &c);
TwoQubitCircuit parse_circuit(std::string_view text);

/// Line-per-gate text rendering for humans. Does not round-trip.
std::string to_pseudoqasm(const TwoQubitCircuit &c);

}  // namespace twoq
