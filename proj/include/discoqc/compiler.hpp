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

#include <Eigen/Dense>

#include "discoqc/circuit.hpp"
#include "discoqc/diagram.hpp"

namespace discoqc {

struct CompileError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Qubits per basic type (aliased types share their canonical base's count)
/// and the CNOT+U(3) ansatz depth.
struct QubitConfig {
  std::map<std::string, int> qubits;
  int ansatz_depth = 1;

  int qubits_of(const std::string& base, const GrammarConfig& grammar) const;
};

/// Sum of the per-atomic-type qubit counts over the flattened type; adjoints
/// do not change the count.
int qubit_count(const PregroupType& t, const QubitConfig& cfg,
                const GrammarConfig& grammar);

/// CNOT+U(3) state ansatz: PrepZero on every qubit, then `depth` layers of
/// a CNOT ladder over adjacent qubits followed by RZ and RX on each qubit.
/// Angle names are `{word}.{layer}.{qubit}.{z|x}` and get registered in the
/// store (default 0).
Circuit word_state_ansatz(const std::string& word, int n_qubits, int depth,
                          ParameterStore& store);

/// The computational-basis transpose: reversed gate order (all supported
/// gates are symmetric matrices) with preps turned into post-selections.
Circuit transpose_to_effect(const Circuit& c);

/// Compiles a bipartite (post-bigraph) diagram: word states become state
/// ansatze on per-wire qubit blocks, swap nodes become SWAP gates, word
/// effects become transposed ansatze ending in post-selections, and the
/// surviving output wires stay open.
Circuit compile_bigraph(const Diagram& d, const QubitConfig& cfg,
                        const GrammarConfig& grammar, ParameterStore& store);

struct EulerParams {
  double alpha = 0.0;
  double beta = 0.0;
  double gamma = 0.0;
};

/// Euler-decomposed one-qubit unitary: emits RZ(gamma), RX(beta), RZ(alpha)
/// in application order, realizing Rz(alpha)·Rx(beta)·Rz(gamma).
std::vector<Gate> euler_unitary(const EulerParams& p, int qubit);

/// The subject/object/verb of a positive transitive sentence (cap words such
/// as the objective sign are ignored).
struct TransitiveSentence {
  std::string subject;
  std::string object;
  std::string verb;
};

/// Names of the verb's SVD-form parameters: two Euler blocks plus the
/// diagonal-state angle. All registered under `{verb}.svd.*`.
struct SvdVerbNames {
  std::string alpha, beta, gamma;     // block A, applied on the subject leg
  std::string alpha2, beta2, gamma2;  // block B, applied on the object leg
  std::string p;                      // diagonal phase state

  static SvdVerbNames for_verb(const std::string& verb);
};

/// The grammar+meaning circuit of a transitive sentence with one-qubit
/// nouns: noun ansatze (RX then RZ), the reduced two-qubit verb state
/// W = A·diag(1,e^{i p})·B^T prepared from a cap (H+CNOT, scalar sqrt(2) in
/// metadata), and the two copy/cup gadgets CNOT(noun -> verb leg) +
/// PostselectZero(leg). 4 qubits; the two cup CNOTs act on disjoint pairs.
/// Open qubits are [object, subject], so the meaning tensor is indexed
/// [object][subject] like the point-wise verb matrix.
Circuit compile_grammar_meaning(const TransitiveSentence& sentence,
                                const QubitConfig& cfg, ParameterStore& store);

/// Bends the verb state of a grammar+meaning circuit into a map applied on
/// one wire between the two noun gadgets: 3 qubits, sequential CNOTs, the
/// adjacent same-axis rotations at the seam fused into one symbolic sum.
/// The post-selected meaning equals the input's up to the recorded scalar.
Circuit choi_form(const Circuit& c);

/// The verb matrix realized by the SVD parametrisation, indexed
/// [object][subject] (the convention of the point-wise semantics).
Eigen::Matrix2cd svd_verb_matrix_obj_sub(const std::string& verb,
                                         const ParameterStore& store);

}  // namespace discoqc
