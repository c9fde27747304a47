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

#include "discoqc/compiler.hpp"

#include <algorithm>
#include <cmath>

#include "discoqc/tensor.hpp"

namespace discoqc {

int QubitConfig::qubits_of(const std::string& base,
                           const GrammarConfig& grammar) const {
  const std::string canonical = grammar.resolve(base);
  auto it = qubits.find(canonical);
  if (it == qubits.end()) it = qubits.find(base);
  if (it == qubits.end()) {
    throw CompileError("no qubit count configured for basic type '" + base + "'");
  }
  if (it->second < 0) throw CompileError("negative qubit count");
  return it->second;
}

int qubit_count(const PregroupType& t, const QubitConfig& cfg,
                const GrammarConfig& grammar) {
  int total = 0;
  for (const auto& st : t.simples) total += cfg.qubits_of(st.base, grammar);
  return total;
}

namespace {

std::string angle_name(const std::string& word, int layer, int qubit,
                       const char* axis) {
  return word + "." + std::to_string(layer) + "." + std::to_string(qubit) +
         "." + axis;
}

}  // namespace

Circuit word_state_ansatz(const std::string& word, int n_qubits, int depth,
                          ParameterStore& store) {
  if (n_qubits < 1) throw CompileError("state ansatz needs at least one qubit");
  if (depth < 0) throw CompileError("negative ansatz depth");
  Circuit c;
  c.n_qubits = n_qubits;
  c.metadata.form = "ansatz";
  for (int q = 0; q < n_qubits; ++q) c.add(prep_zero(q));
  for (int layer = 0; layer < depth; ++layer) {
    for (int q = 0; q + 1 < n_qubits; ++q) c.add(cnot(q, q + 1));
    for (int q = 0; q < n_qubits; ++q) {
      std::string zname = angle_name(word, layer, q, "z");
      std::string xname = angle_name(word, layer, q, "x");
      store.ensure(zname);
      store.ensure(xname);
      c.add(rz(q, AngleRef::symbol(zname)));
      c.add(rx(q, AngleRef::symbol(xname)));
    }
  }
  for (int q = 0; q < n_qubits; ++q) c.open_qubits.push_back(q);
  return c;
}

Circuit transpose_to_effect(const Circuit& c) {
  for (const auto& gate : c.gates) {
    if (gate.kind == GateKind::PostselectZero) {
      throw CompileError("transpose_to_effect expects a state ansatz");
    }
  }
  Circuit out;
  out.n_qubits = c.n_qubits;
  out.metadata.form = "effect";
  for (auto it = c.gates.rbegin(); it != c.gates.rend(); ++it) {
    Gate gate = *it;
    // RZ, RX, H, CNOT and SWAP are symmetric matrices, so the transpose is
    // the reversed gate list; preparations become post-selections.
    if (gate.kind == GateKind::PrepZero) {
      gate.kind = GateKind::PostselectZero;
    }
    out.add(std::move(gate));
  }
  return out;
}

Circuit compile_bigraph(const Diagram& d, const QubitConfig& cfg,
                        const GrammarConfig& grammar, ParameterStore& store) {
  if (!is_bipartite_normal(d)) {
    throw CompileError("compile_bigraph expects a bipartite rewritten diagram");
  }

  // Registers: one contiguous qubit block per state port, in node order.
  std::map<WireId, std::vector<int>> wire_qubits;
  int next_qubit = 0;
  for (const auto& node : d.nodes) {
    if (node.kind != NodeKind::WordState) continue;
    for (WireId w : node.ports) {
      int width = cfg.qubits_of(d.wire_base.at(w), grammar);
      std::vector<int>& qs = wire_qubits[w];
      for (int k = 0; k < width; ++k) qs.push_back(next_qubit++);
    }
  }

  Circuit out;
  out.n_qubits = next_qubit;
  out.metadata.form = "bigraph";

  for (const auto& node : d.nodes) {
    if (node.kind != NodeKind::WordState) continue;
    std::vector<int> mapping;
    for (WireId w : node.ports) {
      const auto& qs = wire_qubits.at(w);
      mapping.insert(mapping.end(), qs.begin(), qs.end());
    }
    if (mapping.empty()) {
      throw CompileError("word '" + node.word + "' has a zero-qubit type");
    }
    Circuit ansatz =
        word_state_ansatz(node.word, static_cast<int>(mapping.size()),
                          cfg.ansatz_depth, store);
    out.add_mapped(ansatz.gates, mapping);
  }

  // Swap nodes, in insertion order. Both incoming bundles are adjacent
  // blocks; bubble the right bundle left across the left one.
  for (const auto& node : d.nodes) {
    if (node.kind != NodeKind::Swap) continue;
    const auto left = wire_qubits.at(node.ports[0]);
    const auto right = wire_qubits.at(node.ports[1]);
    std::vector<int> block = left;
    block.insert(block.end(), right.begin(), right.end());
    for (std::size_t i = 1; i < block.size(); ++i) {
      if (block[i] != block[i - 1] + 1) {
        throw CompileError("swap on non-adjacent qubit blocks");
      }
    }
    int m = static_cast<int>(left.size());
    int n = static_cast<int>(right.size());
    for (int j = 0; j < n; ++j) {
      for (int step = 0; step < m; ++step) {
        int pos = m + j - step;  // index into block
        out.add(swap_gate(block[pos - 1], block[pos]));
      }
    }
    // out_left carries the right bundle, out_right the left bundle.
    wire_qubits[node.ports[2]] =
        std::vector<int>(block.begin(), block.begin() + n);
    wire_qubits[node.ports[3]] =
        std::vector<int>(block.begin() + n, block.end());
  }

  for (const auto& node : d.nodes) {
    if (node.kind != NodeKind::WordEffect) continue;
    std::vector<int> mapping;
    for (WireId w : node.ports) {
      auto it = wire_qubits.find(w);
      if (it == wire_qubits.end()) {
        throw CompileError("effect wire is not fed by any state");
      }
      mapping.insert(mapping.end(), it->second.begin(), it->second.end());
    }
    Circuit effect = transpose_to_effect(word_state_ansatz(
        node.word, static_cast<int>(mapping.size()), cfg.ansatz_depth, store));
    out.add_mapped(effect.gates, mapping);
  }

  for (WireId w : d.outputs) {
    auto it = wire_qubits.find(w);
    if (it == wire_qubits.end()) {
      throw CompileError("output wire is not fed by any state");
    }
    out.open_qubits.insert(out.open_qubits.end(), it->second.begin(),
                           it->second.end());
  }
  return out;
}

std::vector<Gate> euler_unitary(const EulerParams& p, int qubit) {
  return {rz(qubit, AngleRef::literal(p.gamma)),
          rx(qubit, AngleRef::literal(p.beta)),
          rz(qubit, AngleRef::literal(p.alpha))};
}

SvdVerbNames SvdVerbNames::for_verb(const std::string& verb) {
  SvdVerbNames n;
  n.alpha = verb + ".svd.alpha";
  n.beta = verb + ".svd.beta";
  n.gamma = verb + ".svd.gamma";
  n.alpha2 = verb + ".svd.alpha2";
  n.beta2 = verb + ".svd.beta2";
  n.gamma2 = verb + ".svd.gamma2";
  n.p = verb + ".svd.p";
  return n;
}

namespace {

void ensure_svd_names(const SvdVerbNames& n, ParameterStore& store) {
  for (const auto& name :
       {n.alpha, n.beta, n.gamma, n.alpha2, n.beta2, n.gamma2, n.p}) {
    store.ensure(name);
  }
}

std::string noun_x(const std::string& word) { return word + ".gm.x"; }
std::string noun_z(const std::string& word) { return word + ".gm.z"; }

void add_noun_gates(Circuit& c, const std::string& word, int qubit,
                    ParameterStore& store) {
  store.ensure(noun_x(word));
  store.ensure(noun_z(word));
  c.add(rx(qubit, AngleRef::symbol(noun_x(word))));
  c.add(rz(qubit, AngleRef::symbol(noun_z(word))));
}

}  // namespace

Circuit compile_grammar_meaning(const TransitiveSentence& sentence,
                                const QubitConfig& cfg, ParameterStore& store) {
  GrammarConfig standard = GrammarConfig::standard();
  if (cfg.qubits_of("n", standard) != 1) {
    throw CompileError("the grammar+meaning form uses one-qubit nouns");
  }
  SvdVerbNames names = SvdVerbNames::for_verb(sentence.verb);
  ensure_svd_names(names, store);

  const int q_sub = 0, q_obj = 1, q_leg_sub = 2, q_leg_obj = 3;
  Circuit c;
  c.n_qubits = 4;
  c.metadata.form = "grammar-meaning";
  c.metadata.scalar = std::sqrt(2.0);
  c.metadata.transitive = TransitiveTemplate{
      sentence.subject, sentence.object, sentence.verb, q_sub, q_obj};

  for (int q = 0; q < 4; ++q) c.add(prep_zero(q));
  add_noun_gates(c, sentence.subject, q_sub, store);
  add_noun_gates(c, sentence.object, q_obj, store);

  // Verb state W = A · diag(1, e^{i p}) · B^T on the two legs, prepared from
  // the unnormalized cap via H+CNOT (the sqrt(2) lives in the metadata).
  c.add(hadamard(q_leg_sub));
  c.add(cnot(q_leg_sub, q_leg_obj));
  c.add(rz(q_leg_sub, AngleRef::symbol(names.p)));
  c.add(rz(q_leg_sub, AngleRef::symbol(names.gamma)));
  c.add(rx(q_leg_sub, AngleRef::symbol(names.beta)));
  c.add(rz(q_leg_sub, AngleRef::symbol(names.alpha)));
  c.add(rz(q_leg_obj, AngleRef::symbol(names.gamma2)));
  c.add(rx(q_leg_obj, AngleRef::symbol(names.beta2)));
  c.add(rz(q_leg_obj, AngleRef::symbol(names.alpha2)));

  // Copy/cup gadgets; the meaning stays on the noun wires.
  c.metadata.cup_cnots.push_back(static_cast<int>(c.gates.size()));
  c.add(cnot(q_sub, q_leg_sub));
  c.metadata.cup_cnots.push_back(static_cast<int>(c.gates.size()));
  c.add(cnot(q_obj, q_leg_obj));
  c.add(postselect_zero(q_leg_sub));
  c.add(postselect_zero(q_leg_obj));

  c.open_qubits = {q_obj, q_sub};
  return c;
}

Circuit choi_form(const Circuit& in) {
  if (in.metadata.form != "grammar-meaning" || !in.metadata.transitive ||
      in.n_qubits != 4) {
    throw CompileError("choi_form expects the 4-qubit grammar+meaning template");
  }
  const TransitiveTemplate& t = *in.metadata.transitive;
  SvdVerbNames names = SvdVerbNames::for_verb(t.verb_word);

  const int q_sub = 0, q_obj = 1, q_wire = 2;
  Circuit c;
  c.n_qubits = 3;
  c.metadata.form = "choi";
  c.metadata.scalar = 1.0;
  c.metadata.transitive = TransitiveTemplate{
      t.subject_word, t.object_word, t.verb_word, q_sub, q_obj};

  for (int q = 0; q < 3; ++q) c.add(prep_zero(q));
  for (const auto& gate : in.gates) {
    // Re-emit the noun rotations verbatim on the new register.
    if ((gate.kind == GateKind::RZ || gate.kind == GateKind::RX) &&
        (gate.qubits[0] == t.subject_qubit || gate.qubits[0] == t.object_qubit)) {
      Gate copy = gate;
      copy.qubits[0] = gate.qubits[0] == t.subject_qubit ? q_sub : q_obj;
      c.add(std::move(copy));
    }
  }

  // The verb state becomes the wire map W = A · diag(1,e^{ip}) · B^T applied
  // between the object and subject gadgets; the three adjacent RZ's at the
  // seam (gamma2 from B^T, the diagonal, gamma from A) fuse into one.
  c.metadata.cup_cnots.push_back(static_cast<int>(c.gates.size()));
  c.add(cnot(q_obj, q_wire));
  c.add(rz(q_wire, AngleRef::symbol(names.alpha2)));
  c.add(rx(q_wire, AngleRef::symbol(names.beta2)));
  AngleRef fused = AngleRef::symbol(names.gamma2)
                       .fused_with(AngleRef::symbol(names.p))
                       .fused_with(AngleRef::symbol(names.gamma));
  c.add(rz(q_wire, fused));
  c.add(rx(q_wire, AngleRef::symbol(names.beta)));
  c.add(rz(q_wire, AngleRef::symbol(names.alpha)));
  c.metadata.cup_cnots.push_back(static_cast<int>(c.gates.size()));
  c.add(cnot(q_sub, q_wire));
  c.add(postselect_zero(q_wire));

  c.open_qubits = {q_obj, q_sub};
  return c;
}

Eigen::Matrix2cd svd_verb_matrix_obj_sub(const std::string& verb,
                                         const ParameterStore& store) {
  SvdVerbNames n = SvdVerbNames::for_verb(verb);
  auto rz_m = [](double t) {
    Eigen::Matrix2cd m = Eigen::Matrix2cd::Zero();
    m(0, 0) = std::exp(Complex(0, -t / 2));
    m(1, 1) = std::exp(Complex(0, t / 2));
    return m;
  };
  auto rx_m = [](double t) {
    Eigen::Matrix2cd m;
    m << std::cos(t / 2), Complex(0, -std::sin(t / 2)),
        Complex(0, -std::sin(t / 2)), std::cos(t / 2);
    return m;
  };
  Eigen::Matrix2cd a =
      rz_m(store.at(n.alpha)) * rx_m(store.at(n.beta)) * rz_m(store.at(n.gamma));
  Eigen::Matrix2cd b = rz_m(store.at(n.alpha2)) * rx_m(store.at(n.beta2)) *
                       rz_m(store.at(n.gamma2));
  Eigen::Matrix2cd w_sub_obj = a * rz_m(store.at(n.p)) * b.transpose();
  return w_sub_obj.transpose();
}

}  // namespace discoqc
