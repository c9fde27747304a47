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

#include "discoqc/simulator.hpp"

#include <algorithm>
#include <cmath>

namespace discoqc {

namespace {

using Vector = Eigen::VectorXcd;

/// Statevector over the still-alive qubits of a fixed register. Gate qubit
/// indices are register positions; post-selection shrinks the vector and the
/// register map together.
class LiveState {
 public:
  explicit LiveState(int n_register) : positions_(n_register, -1) {
    for (int q = 0; q < n_register; ++q) {
      positions_[q] = q;
      order_.push_back(q);
    }
    amps_ = Vector::Zero(std::int64_t(1) << n_register);
    amps_(0) = 1.0;
  }

  int position(int reg_qubit) const {
    int p = positions_[reg_qubit];
    if (p < 0) {
      throw SimulationError("gate acts on an already post-selected qubit");
    }
    return p;
  }

  void apply_single(int reg_qubit, const Eigen::Matrix2cd& m) {
    int bit = position(reg_qubit);
    std::int64_t step = std::int64_t(1) << bit;
    for (std::int64_t base = 0; base < amps_.size(); base += 2 * step) {
      for (std::int64_t i = base; i < base + step; ++i) {
        Complex a0 = amps_(i);
        Complex a1 = amps_(i + step);
        amps_(i) = m(0, 0) * a0 + m(0, 1) * a1;
        amps_(i + step) = m(1, 0) * a0 + m(1, 1) * a1;
      }
    }
  }

  void apply_cnot(int reg_ctrl, int reg_tgt) {
    std::int64_t c = std::int64_t(1) << position(reg_ctrl);
    std::int64_t t = std::int64_t(1) << position(reg_tgt);
    for (std::int64_t i = 0; i < amps_.size(); ++i) {
      if ((i & c) && !(i & t)) std::swap(amps_(i), amps_(i | t));
    }
  }

  void apply_swap(int reg_a, int reg_b) {
    std::int64_t a = std::int64_t(1) << position(reg_a);
    std::int64_t b = std::int64_t(1) << position(reg_b);
    for (std::int64_t i = 0; i < amps_.size(); ++i) {
      if ((i & a) && !(i & b)) std::swap(amps_(i), amps_(i ^ a ^ b));
    }
  }

  void postselect_zero(int reg_qubit) {
    int bit = position(reg_qubit);
    std::int64_t step = std::int64_t(1) << bit;
    Vector next(amps_.size() / 2);
    for (std::int64_t i = 0; i < next.size(); ++i) {
      std::int64_t low = i & (step - 1);
      std::int64_t high = (i & ~(step - 1)) << 1;
      next(i) = amps_(high | low);
    }
    amps_ = std::move(next);
    positions_[reg_qubit] = -1;
    order_.erase(std::find(order_.begin(), order_.end(), reg_qubit));
    for (int q = 0; q < static_cast<int>(positions_.size()); ++q) {
      if (positions_[q] > bit) positions_[q]--;
    }
  }

  const Vector& amplitudes() const { return amps_; }
  const std::vector<int>& alive() const { return order_; }

  /// Amplitudes reordered so that listed[b] is bit b.
  Vector reordered(const std::vector<int>& listed) const {
    if (listed.size() != order_.size()) {
      throw SimulationError("open qubit list does not match the live qubits");
    }
    std::vector<int> src_bit(listed.size());
    for (std::size_t b = 0; b < listed.size(); ++b) {
      int p = positions_[listed[b]];
      if (p < 0) throw SimulationError("open qubit was post-selected");
      src_bit[b] = p;
    }
    Vector out(amps_.size());
    for (std::int64_t i = 0; i < amps_.size(); ++i) {
      std::int64_t j = 0;
      for (std::size_t b = 0; b < src_bit.size(); ++b) {
        if (i & (std::int64_t(1) << src_bit[b])) j |= std::int64_t(1) << b;
      }
      out(j) = amps_(i);
    }
    return out;
  }

 private:
  Vector amps_;
  std::vector<int> positions_;  // register qubit -> current bit, -1 if gone
  std::vector<int> order_;      // alive register qubits by current bit
};

Eigen::Matrix2cd rz_matrix(double theta) {
  Eigen::Matrix2cd m = Eigen::Matrix2cd::Zero();
  m(0, 0) = std::exp(Complex(0, -theta / 2));
  m(1, 1) = std::exp(Complex(0, theta / 2));
  return m;
}

Eigen::Matrix2cd rx_matrix(double theta) {
  Eigen::Matrix2cd m;
  double c = std::cos(theta / 2);
  Complex s = Complex(0, -std::sin(theta / 2));
  m << c, s, s, c;
  return m;
}

Eigen::Matrix2cd h_matrix() {
  Eigen::Matrix2cd m;
  double r = 1.0 / std::sqrt(2.0);
  m << r, r, r, -r;
  return m;
}

void check_finite(double angle) {
  if (!std::isfinite(angle)) throw SimulationError("non-finite rotation angle");
}

}  // namespace

MeaningState simulate(const Circuit& c, const ParameterStore& store) {
  LiveState state(c.n_qubits);
  std::vector<bool> touched(c.n_qubits, false);
  for (const auto& gate : c.gates) {
    switch (gate.kind) {
      case GateKind::PrepZero:
        if (touched[gate.qubits[0]]) {
          throw SimulationError("PrepZero after the qubit was already used");
        }
        break;
      case GateKind::RZ: {
        double theta = gate.angle.resolve(store);
        check_finite(theta);
        state.apply_single(gate.qubits[0], rz_matrix(theta));
        break;
      }
      case GateKind::RX: {
        double theta = gate.angle.resolve(store);
        check_finite(theta);
        state.apply_single(gate.qubits[0], rx_matrix(theta));
        break;
      }
      case GateKind::H:
        state.apply_single(gate.qubits[0], h_matrix());
        break;
      case GateKind::CNOT:
        state.apply_cnot(gate.qubits[0], gate.qubits[1]);
        break;
      case GateKind::SWAP:
        state.apply_swap(gate.qubits[0], gate.qubits[1]);
        break;
      case GateKind::PostselectZero:
        state.postselect_zero(gate.qubits[0]);
        break;
    }
    for (int q : gate.qubits) touched[q] = true;
  }

  std::vector<int> alive_sorted = state.alive();
  std::sort(alive_sorted.begin(), alive_sorted.end());
  std::vector<int> open_sorted = c.open_qubits;
  std::sort(open_sorted.begin(), open_sorted.end());
  if (alive_sorted != open_sorted) {
    throw SimulationError(
        "circuit leaves qubits that are neither open nor post-selected");
  }

  MeaningState out;
  out.open_qubits = c.open_qubits;
  out.amplitudes = state.reordered(c.open_qubits) * c.metadata.scalar;
  out.scalar = c.metadata.scalar;
  return out;
}

Complex amplitude(const Circuit& c, const ParameterStore& store) {
  if (!c.open_qubits.empty()) {
    throw SimulationError("amplitude requires a fully post-selected circuit");
  }
  MeaningState state = simulate(c, store);
  return state.amplitudes(0);
}

double fidelity(const MeaningState& a, const MeaningState& b) {
  if (a.open_qubits.size() != b.open_qubits.size()) {
    throw SimulationError("fidelity of states with different open qubit counts");
  }
  double na = a.amplitudes.squaredNorm();
  double nb = b.amplitudes.squaredNorm();
  if (na <= 0.0 || nb <= 0.0) {
    throw SimulationError("fidelity of a zero meaning state");
  }
  Complex inner = a.amplitudes.dot(b.amplitudes);
  // Cauchy-Schwarz bounds the true value by 1; rounding can overshoot.
  return std::min(std::norm(inner) / (na * nb), 1.0);
}

Eigen::MatrixXcd circuit_unitary(const Circuit& c, const ParameterStore& store) {
  if (c.n_qubits > 10) {
    throw SimulationError("circuit_unitary supports at most 10 qubits");
  }
  std::int64_t dim = std::int64_t(1) << c.n_qubits;
  Eigen::MatrixXcd u = Eigen::MatrixXcd::Identity(dim, dim);

  auto apply_single = [&](int bit, const Eigen::Matrix2cd& m) {
    std::int64_t step = std::int64_t(1) << bit;
    for (std::int64_t col = 0; col < dim; ++col) {
      for (std::int64_t base = 0; base < dim; base += 2 * step) {
        for (std::int64_t i = base; i < base + step; ++i) {
          Complex a0 = u(i, col);
          Complex a1 = u(i + step, col);
          u(i, col) = m(0, 0) * a0 + m(0, 1) * a1;
          u(i + step, col) = m(1, 0) * a0 + m(1, 1) * a1;
        }
      }
    }
  };

  for (const auto& gate : c.gates) {
    switch (gate.kind) {
      case GateKind::PrepZero:
      case GateKind::PostselectZero:
        break;
      case GateKind::RZ:
        apply_single(gate.qubits[0], rz_matrix(gate.angle.resolve(store)));
        break;
      case GateKind::RX:
        apply_single(gate.qubits[0], rx_matrix(gate.angle.resolve(store)));
        break;
      case GateKind::H:
        apply_single(gate.qubits[0], h_matrix());
        break;
      case GateKind::CNOT: {
        std::int64_t cb = std::int64_t(1) << gate.qubits[0];
        std::int64_t tb = std::int64_t(1) << gate.qubits[1];
        for (std::int64_t col = 0; col < dim; ++col) {
          for (std::int64_t i = 0; i < dim; ++i) {
            if ((i & cb) && !(i & tb)) std::swap(u(i, col), u(i | tb, col));
          }
        }
        break;
      }
      case GateKind::SWAP: {
        std::int64_t ab = std::int64_t(1) << gate.qubits[0];
        std::int64_t bb = std::int64_t(1) << gate.qubits[1];
        for (std::int64_t col = 0; col < dim; ++col) {
          for (std::int64_t i = 0; i < dim; ++i) {
            if ((i & ab) && !(i & bb)) std::swap(u(i, col), u(i ^ ab ^ bb, col));
          }
        }
        break;
      }
    }
  }
  return u;
}

Tensor state_to_tensor(const Eigen::VectorXcd& amplitudes,
                       const std::vector<int>& widths) {
  int total = 0;
  for (int w : widths) total += w;
  if (amplitudes.size() != (std::int64_t(1) << total)) {
    throw SimulationError("statevector length does not match the leg widths");
  }
  std::vector<std::int64_t> shape;
  for (int w : widths) shape.push_back(std::int64_t(1) << w);
  Tensor t(shape);
  std::vector<std::int64_t> idx(widths.size(), 0);
  for (std::int64_t off = 0; off < t.size(); ++off) {
    std::int64_t vec_index = 0;
    int qubit = 0;
    for (std::size_t leg = 0; leg < widths.size(); ++leg) {
      for (int b = 0; b < widths[leg]; ++b) {
        if (idx[leg] & (std::int64_t(1) << b)) {
          vec_index |= std::int64_t(1) << (qubit + b);
        }
      }
      qubit += widths[leg];
    }
    t.at(idx) = amplitudes(vec_index);
    for (std::size_t k = widths.size(); k-- > 0;) {
      if (++idx[k] < shape[k]) break;
      idx[k] = 0;
    }
  }
  return t;
}

Tensor meaning_to_tensor(const MeaningState& state, const std::vector<int>& widths) {
  return state_to_tensor(state.amplitudes, widths);
}

}  // namespace discoqc
