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
#include "discoqc/tensor.hpp"

namespace discoqc {

struct SimulationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// The (sub-normalized) state left on a circuit's open qubits after all
/// post-selections. amplitudes[k] indexes the open qubits little-endian in
/// listed order: bit b of k is open_qubits[b]. The metadata scalar has
/// already been multiplied in; `scalar` records it.
struct MeaningState {
  std::vector<int> open_qubits;
  Eigen::VectorXcd amplitudes;
  double scalar = 1.0;
};

/// Dense statevector simulation. PostselectZero projects onto |0> of its
/// qubit without renormalizing and drops the qubit; a post-selection that
/// yields the exact zero vector is returned, not an error. Every qubit left
/// alive at the end must be listed in open_qubits.
MeaningState simulate(const Circuit& c, const ParameterStore& store);

/// The single remaining amplitude of a fully post-selected circuit (times
/// the metadata scalar). Errors when open qubits remain.
Complex amplitude(const Circuit& c, const ParameterStore& store);

/// |<a,b>|^2 / (|a|^2 |b|^2); errors on zero vectors or mismatched open
/// qubit counts.
double fidelity(const MeaningState& a, const MeaningState& b);

/// The full 2^n x 2^n matrix of the unitary gate sequence, ignoring preps
/// and post-selections. Limited to 10 qubits.
Eigen::MatrixXcd circuit_unitary(const Circuit& c, const ParameterStore& store);

/// Reshapes a statevector over qubit groups of the given widths into a
/// tensor with one axis per group (axis k has dimension 2^widths[k]); within
/// a group the first qubit is the least significant bit of the axis index.
Tensor state_to_tensor(const Eigen::VectorXcd& amplitudes,
                       const std::vector<int>& widths);

Tensor meaning_to_tensor(const MeaningState& state, const std::vector<int>& widths);

}  // namespace discoqc
