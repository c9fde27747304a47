// Copyright 2026 The discoqc developers
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

#include "discoqc/parameters.hpp"

namespace discoqc {

struct CircuitError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A rotation angle: a literal constant plus a sum of named parameters.
/// Plain symbols and plain literals are the common cases; sums appear when
/// adjacent same-axis rotations are fused.
struct AngleRef {
  double constant = 0.0;
  std::vector<std::string> terms;

  static AngleRef literal(double value) { return {value, {}}; }
  static AngleRef symbol(std::string name) { return {0.0, {std::move(name)}}; }

  bool is_symbolic() const { return !terms.empty(); }
  double resolve(const ParameterStore& store) const;
  AngleRef fused_with(const AngleRef& other) const;

  friend bool operator==(const AngleRef&, const AngleRef&) = default;
};

enum class GateKind { RZ, RX, H, CNOT, SWAP, PrepZero, PostselectZero };

/// RZ/RX carry one qubit and an angle; H/PrepZero/PostselectZero one qubit;
/// CNOT is (control, target); SWAP is an unordered pair.
struct Gate {
  GateKind kind;
  std::vector<int> qubits;
  AngleRef angle;

  friend bool operator==(const Gate&, const Gate&) = default;
};

Gate rz(int qubit, AngleRef angle);
Gate rx(int qubit, AngleRef angle);
Gate hadamard(int qubit);
Gate cnot(int control, int target);
Gate swap_gate(int a, int b);
Gate prep_zero(int qubit);
Gate postselect_zero(int qubit);

/// Role bookkeeping for the fixed transitive templates, kept in metadata so
/// a compiled circuit file can be re-ingested and transformed.
struct TransitiveTemplate {
  std::string subject_word;
  std::string object_word;
  std::string verb_word;
  int subject_qubit = 0;
  int object_qubit = 1;

  friend bool operator==(const TransitiveTemplate&, const TransitiveTemplate&) = default;
};

struct CircuitMeta {
  /// Multiplies the simulated state so that cup/cap bookkeeping composes
  /// exactly with the tensor semantics.
  double scalar = 1.0;
  std::string form;  // "bigraph", "grammar-meaning", "choi", "ansatz", ...
  /// Indices (into gates) of the CNOTs realizing grammatical cups.
  std::vector<int> cup_cnots;
  std::optional<TransitiveTemplate> transitive;

  friend bool operator==(const CircuitMeta&, const CircuitMeta&) = default;
};

/// An ordered gate program over a fixed qubit register. Qubit indices always
/// refer to register positions at circuit-build time; post-selection removes
/// qubits during simulation without renumbering the register. Qubit 0 is the
/// least significant amplitude index (little endian).
struct Circuit {
  int n_qubits = 0;
  std::vector<Gate> gates;
  std::vector<int> open_qubits;
  std::vector<std::string> params;  // symbolic names, in first-use order
  CircuitMeta metadata;

  void add(Gate gate);
  /// Appends a fragment with its qubits remapped: local qubit i acts on
  /// mapping[i].
  void add_mapped(const std::vector<Gate>& fragment, const std::vector<int>& mapping);
  void note_param(const std::string& name);

  friend bool operator==(const Circuit&, const Circuit&) = default;
};

enum class CircuitFormat { Json, Qasm };

/// Lossless JSON round-trip; the qasm subset resolves every angle through
/// the store (error when a referenced name is missing) and writes preps as
/// reset and post-selections as annotated measurements.
std::string export_circuit(const Circuit& c, CircuitFormat format,
                           const ParameterStore* store = nullptr);
Circuit parse_circuit_json(const std::string& text);

}  // namespace discoqc
