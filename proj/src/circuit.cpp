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

#include "discoqc/circuit.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

#include "discoqc/json_io.hpp"

namespace discoqc {

double AngleRef::resolve(const ParameterStore& store) const {
  double total = constant;
  for (const auto& name : terms) total += store.at(name);
  return total;
}

AngleRef AngleRef::fused_with(const AngleRef& other) const {
  AngleRef out = *this;
  out.constant += other.constant;
  out.terms.insert(out.terms.end(), other.terms.begin(), other.terms.end());
  return out;
}

Gate rz(int qubit, AngleRef angle) { return {GateKind::RZ, {qubit}, std::move(angle)}; }
Gate rx(int qubit, AngleRef angle) { return {GateKind::RX, {qubit}, std::move(angle)}; }
Gate hadamard(int qubit) { return {GateKind::H, {qubit}, {}}; }

Gate cnot(int control, int target) {
  if (control == target) throw CircuitError("CNOT control equals target");
  return {GateKind::CNOT, {control, target}, {}};
}

Gate swap_gate(int a, int b) {
  if (a == b) throw CircuitError("SWAP on a single qubit");
  return {GateKind::SWAP, {a, b}, {}};
}

Gate prep_zero(int qubit) { return {GateKind::PrepZero, {qubit}, {}}; }
Gate postselect_zero(int qubit) { return {GateKind::PostselectZero, {qubit}, {}}; }

void Circuit::add(Gate gate) {
  for (int q : gate.qubits) {
    if (q < 0 || q >= n_qubits) {
      throw CircuitError("gate qubit index out of range");
    }
  }
  for (const auto& name : gate.angle.terms) note_param(name);
  gates.push_back(std::move(gate));
}

void Circuit::add_mapped(const std::vector<Gate>& fragment,
                         const std::vector<int>& mapping) {
  for (Gate gate : fragment) {
    for (auto& q : gate.qubits) {
      if (q < 0 || static_cast<std::size_t>(q) >= mapping.size()) {
        throw CircuitError("fragment qubit outside the mapping");
      }
      q = mapping[static_cast<std::size_t>(q)];
    }
    add(std::move(gate));
  }
}

void Circuit::note_param(const std::string& name) {
  if (std::find(params.begin(), params.end(), name) == params.end()) {
    params.push_back(name);
  }
}

namespace {

const char* gate_kind_name(GateKind kind) {
  switch (kind) {
    case GateKind::RZ: return "rz";
    case GateKind::RX: return "rx";
    case GateKind::H: return "h";
    case GateKind::CNOT: return "cnot";
    case GateKind::SWAP: return "swap";
    case GateKind::PrepZero: return "prep0";
    case GateKind::PostselectZero: return "postselect0";
  }
  return "?";
}

GateKind gate_kind_from(const std::string& name) {
  if (name == "rz") return GateKind::RZ;
  if (name == "rx") return GateKind::RX;
  if (name == "h") return GateKind::H;
  if (name == "cnot") return GateKind::CNOT;
  if (name == "swap") return GateKind::SWAP;
  if (name == "prep0") return GateKind::PrepZero;
  if (name == "postselect0") return GateKind::PostselectZero;
  throw CircuitError("unknown gate kind '" + name + "'");
}

bool has_angle(GateKind kind) {
  return kind == GateKind::RZ || kind == GateKind::RX;
}

std::string circuit_to_json(const Circuit& c) {
  JsonWriter w;
  w.begin_object();
  w.key("n_qubits").value(c.n_qubits);
  w.key("gates").begin_array();
  for (const auto& gate : c.gates) {
    w.begin_object();
    w.key("kind").value(gate_kind_name(gate.kind));
    w.key("qubits").begin_array();
    for (int q : gate.qubits) w.value(q);
    w.end_array();
    if (has_angle(gate.kind)) {
      w.key("angle").begin_object();
      w.key("const").value(gate.angle.constant);
      w.key("refs").begin_array();
      for (const auto& name : gate.angle.terms) w.value(name);
      w.end_array();
      w.end_object();
    }
    w.end_object();
  }
  w.end_array();
  w.key("open_qubits").begin_array();
  for (int q : c.open_qubits) w.value(q);
  w.end_array();
  w.key("params").begin_array();
  for (const auto& name : c.params) w.value(name);
  w.end_array();
  w.key("metadata").begin_object();
  w.key("scalar").value(c.metadata.scalar);
  w.key("form").value(c.metadata.form);
  w.key("cup_cnots").begin_array();
  for (int i : c.metadata.cup_cnots) w.value(i);
  w.end_array();
  if (c.metadata.transitive) {
    const auto& t = *c.metadata.transitive;
    w.key("transitive").begin_object();
    w.key("subject_word").value(t.subject_word);
    w.key("object_word").value(t.object_word);
    w.key("verb_word").value(t.verb_word);
    w.key("subject_qubit").value(t.subject_qubit);
    w.key("object_qubit").value(t.object_qubit);
    w.end_object();
  }
  w.end_object();
  w.end_object();
  return w.str() + "\n";
}

std::string circuit_to_qasm(const Circuit& c, const ParameterStore* store) {
  std::ostringstream out;
  out << "OPENQASM 2.0;\n";
  out << "include \"qelib1.inc\";\n";
  out << "qreg q[" << c.n_qubits << "];\n";
  bool any_measure = std::any_of(c.gates.begin(), c.gates.end(), [](const Gate& g) {
    return g.kind == GateKind::PostselectZero;
  });
  if (any_measure) out << "creg c[" << c.n_qubits << "];\n";
  for (const auto& gate : c.gates) {
    switch (gate.kind) {
      case GateKind::PrepZero:
        out << "reset q[" << gate.qubits[0] << "];\n";
        break;
      case GateKind::PostselectZero:
        out << "measure q[" << gate.qubits[0] << "] -> c[" << gate.qubits[0]
            << "]; // postselect |0>\n";
        break;
      case GateKind::H:
        out << "h q[" << gate.qubits[0] << "];\n";
        break;
      case GateKind::CNOT:
        out << "cx q[" << gate.qubits[0] << "],q[" << gate.qubits[1] << "];\n";
        break;
      case GateKind::SWAP:
        out << "swap q[" << gate.qubits[0] << "],q[" << gate.qubits[1] << "];\n";
        break;
      case GateKind::RZ:
      case GateKind::RX: {
        if (gate.angle.is_symbolic() && store == nullptr) {
          throw CircuitError("qasm export requires resolved angles");
        }
        double angle = store ? gate.angle.resolve(*store) : gate.angle.constant;
        out << (gate.kind == GateKind::RZ ? "rz(" : "rx(")
            << format_double(angle) << ") q[" << gate.qubits[0] << "];\n";
        break;
      }
    }
  }
  return out.str();
}

}  // namespace

std::string export_circuit(const Circuit& c, CircuitFormat format,
                           const ParameterStore* store) {
  switch (format) {
    case CircuitFormat::Json: return circuit_to_json(c);
    case CircuitFormat::Qasm: return circuit_to_qasm(c, store);
  }
  throw CircuitError("unknown export format");
}

Circuit parse_circuit_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  Circuit c;
  c.n_qubits = j.at("n_qubits").get<int>();
  for (const auto& jg : j.at("gates")) {
    Gate gate;
    gate.kind = gate_kind_from(jg.at("kind").get<std::string>());
    for (const auto& q : jg.at("qubits")) gate.qubits.push_back(q.get<int>());
    if (jg.contains("angle")) {
      gate.angle.constant = jg.at("angle").at("const").get<double>();
      for (const auto& name : jg.at("angle").at("refs")) {
        gate.angle.terms.push_back(name.get<std::string>());
      }
    }
    c.add(std::move(gate));
  }
  for (const auto& q : j.at("open_qubits")) c.open_qubits.push_back(q.get<int>());
  c.params.clear();
  for (const auto& name : j.at("params")) {
    c.params.push_back(name.get<std::string>());
  }
  const auto& jm = j.at("metadata");
  c.metadata.scalar = jm.at("scalar").get<double>();
  c.metadata.form = jm.at("form").get<std::string>();
  for (const auto& i : jm.at("cup_cnots")) c.metadata.cup_cnots.push_back(i.get<int>());
  if (jm.contains("transitive")) {
    TransitiveTemplate t;
    const auto& jt = jm.at("transitive");
    t.subject_word = jt.at("subject_word").get<std::string>();
    t.object_word = jt.at("object_word").get<std::string>();
    t.verb_word = jt.at("verb_word").get<std::string>();
    t.subject_qubit = jt.at("subject_qubit").get<int>();
    t.object_qubit = jt.at("object_qubit").get<int>();
    c.metadata.transitive = t;
  }
  return c;
}

}  // namespace discoqc
