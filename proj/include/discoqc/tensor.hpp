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

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace discoqc {

struct TensorError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

using Complex = std::complex<double>;

/// Dense complex tensor of dynamic rank, row-major. Rank 0 is a scalar with
/// one entry. Diagram wires map to axes; the sizes here are tiny, so clarity
/// beats cleverness throughout.
class Tensor {
 public:
  Tensor() : data_(1, Complex(0.0)) {}  // rank-0 zero
  explicit Tensor(std::vector<std::int64_t> shape);
  static Tensor scalar(Complex value);
  /// Order-2 delta tensor: the eta/epsilon map of FVect in a fixed basis.
  static Tensor delta(std::int64_t dim);

  const std::vector<std::int64_t>& shape() const { return shape_; }
  std::size_t rank() const { return shape_.size(); }
  std::int64_t size() const { return static_cast<std::int64_t>(data_.size()); }

  Complex& flat(std::int64_t i) { return data_[static_cast<std::size_t>(i)]; }
  Complex flat(std::int64_t i) const { return data_[static_cast<std::size_t>(i)]; }
  Complex& at(const std::vector<std::int64_t>& index);
  Complex at(const std::vector<std::int64_t>& index) const;
  const std::vector<Complex>& data() const { return data_; }
  std::vector<Complex>& data() { return data_; }

  Complex scalar_value() const;

  /// New tensor with axes reordered: result axis k = this axis perm[k].
  Tensor permuted(const std::vector<std::size_t>& perm) const;
  /// Contracts (sums over) a pair of equal-dimension axes of this tensor.
  Tensor traced(std::size_t ax1, std::size_t ax2) const;

  Tensor& operator*=(Complex factor);
  double max_abs_diff(const Tensor& other) const;
  double norm() const;

  std::int64_t offset_of(const std::vector<std::int64_t>& index) const;

 private:
  std::vector<std::int64_t> shape_;
  std::vector<Complex> data_;
};

/// Contracts axes_a of a against axes_b of b (pairwise, equal dims); the
/// result keeps a's free axes then b's free axes. Empty axis lists give the
/// outer product.
Tensor contract(const Tensor& a, const std::vector<std::size_t>& axes_a,
                const Tensor& b, const std::vector<std::size_t>& axes_b);

}  // namespace discoqc
