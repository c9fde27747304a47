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

// Test-only oracles, deliberately independent of the library's contraction
// and gate machinery: exhaustive index loops and explicit 2x2 formulas.

#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <map>
#include <string>
#include <vector>

#include "discoqc/diagram.hpp"
#include "discoqc/fvect.hpp"
#include "discoqc/parameters.hpp"
#include "discoqc/tensor.hpp"

namespace discoqc::testing {

/// Brute-force diagram evaluation: sums the product of all node factors over
/// every assignment of every wire. Exponential, fine at test scale.
inline Tensor brute_force_evaluate(const Diagram& d,
                                   const std::map<std::string, Tensor>& lexicon,
                                   const DimConfig& dims,
                                   const GrammarConfig& grammar) {
  std::vector<WireId> wires;
  std::vector<std::int64_t> wire_dims;
  for (const auto& [w, base] : d.wire_base) {
    wires.push_back(w);
    wire_dims.push_back(dims.dim_of(base, grammar));
  }
  auto wire_slot = [&](WireId w) {
    for (std::size_t i = 0; i < wires.size(); ++i) {
      if (wires[i] == w) return i;
    }
    throw std::runtime_error("unknown wire in oracle");
  };

  std::vector<std::int64_t> out_shape;
  for (WireId w : d.outputs) out_shape.push_back(wire_dims[wire_slot(w)]);
  Tensor result(out_shape);

  std::vector<std::int64_t> assign(wires.size(), 0);
  bool done = wires.empty();
  bool first = true;
  while (first || !done) {
    first = false;
    Complex term(1.0, 0.0);
    for (const auto& node : d.nodes) {
      switch (node.kind) {
        case NodeKind::WordState:
        case NodeKind::WordEffect: {
          std::vector<std::int64_t> idx;
          for (WireId w : node.ports) idx.push_back(assign[wire_slot(w)]);
          term *= lexicon.at(node.word).at(idx);
          break;
        }
        case NodeKind::Cup:
        case NodeKind::Cap:
          if (assign[wire_slot(node.ports[0])] != assign[wire_slot(node.ports[1])]) {
            term = 0.0;
          }
          break;
        case NodeKind::Swap:
          if (assign[wire_slot(node.ports[0])] != assign[wire_slot(node.ports[3])] ||
              assign[wire_slot(node.ports[1])] != assign[wire_slot(node.ports[2])]) {
            term = 0.0;
          }
          break;
      }
      if (term == Complex(0.0)) break;
    }
    if (term != Complex(0.0)) {
      std::vector<std::int64_t> out_idx;
      for (WireId w : d.outputs) out_idx.push_back(assign[wire_slot(w)]);
      result.at(out_idx) += term;
    }
    // next assignment
    done = true;
    for (std::size_t k = wires.size(); k-- > 0;) {
      if (++assign[k] < wire_dims[k]) {
        done = false;
        break;
      }
      assign[k] = 0;
    }
    if (wires.empty()) break;
  }
  return result;
}

inline Eigen::Matrix2cd oracle_rz(double t) {
  Eigen::Matrix2cd m = Eigen::Matrix2cd::Zero();
  m(0, 0) = std::exp(Complex(0, -t / 2));
  m(1, 1) = std::exp(Complex(0, t / 2));
  return m;
}

inline Eigen::Matrix2cd oracle_rx(double t) {
  Eigen::Matrix2cd m;
  m << std::cos(t / 2), Complex(0, -std::sin(t / 2)),
      Complex(0, -std::sin(t / 2)), std::cos(t / 2);
  return m;
}

/// Euler product by direct 2x2 multiplication.
inline Eigen::Matrix2cd oracle_euler(double alpha, double beta, double gamma) {
  return oracle_rz(alpha) * oracle_rx(beta) * oracle_rz(gamma);
}

inline double max_abs(const Eigen::MatrixXcd& m) {
  return m.cwiseAbs().maxCoeff();
}

/// Random real tensor with entries in [-1, 1] (imaginary parts optional).
inline Tensor random_tensor(const std::vector<std::int64_t>& shape, UniformRng& rng,
                            bool complex_entries = false) {
  Tensor t(shape);
  for (std::int64_t i = 0; i < t.size(); ++i) {
    double re = 2.0 * rng.next_unit() - 1.0;
    double im = complex_entries ? 2.0 * rng.next_unit() - 1.0 : 0.0;
    t.flat(i) = Complex(re, im);
  }
  return t;
}

}  // namespace discoqc::testing
