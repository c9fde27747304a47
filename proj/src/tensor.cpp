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

#include "discoqc/tensor.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>

namespace discoqc {

namespace {

std::int64_t product(const std::vector<std::int64_t>& dims) {
  std::int64_t p = 1;
  for (auto d : dims) p *= d;
  return p;
}

}  // namespace

Tensor::Tensor(std::vector<std::int64_t> shape) : shape_(std::move(shape)) {
  for (auto d : shape_) {
    if (d <= 0) throw TensorError("tensor dimensions must be positive");
  }
  data_.assign(static_cast<std::size_t>(product(shape_)), Complex(0.0));
}

Tensor Tensor::scalar(Complex value) {
  Tensor t;
  t.data_[0] = value;
  return t;
}

Tensor Tensor::delta(std::int64_t dim) {
  Tensor t({dim, dim});
  for (std::int64_t i = 0; i < dim; ++i) t.data_[static_cast<std::size_t>(i * dim + i)] = 1.0;
  return t;
}

std::int64_t Tensor::offset_of(const std::vector<std::int64_t>& index) const {
  if (index.size() != shape_.size()) {
    throw TensorError("index rank mismatch");
  }
  std::int64_t off = 0;
  for (std::size_t k = 0; k < shape_.size(); ++k) {
    if (index[k] < 0 || index[k] >= shape_[k]) {
      throw TensorError("tensor index out of range");
    }
    off = off * shape_[k] + index[k];
  }
  return off;
}

Complex& Tensor::at(const std::vector<std::int64_t>& index) {
  return data_[static_cast<std::size_t>(offset_of(index))];
}

Complex Tensor::at(const std::vector<std::int64_t>& index) const {
  return data_[static_cast<std::size_t>(offset_of(index))];
}

Complex Tensor::scalar_value() const {
  if (!shape_.empty()) throw TensorError("tensor is not a scalar");
  return data_[0];
}

Tensor Tensor::permuted(const std::vector<std::size_t>& perm) const {
  if (perm.size() != shape_.size()) throw TensorError("permutation rank mismatch");
  std::vector<std::int64_t> new_shape(perm.size());
  for (std::size_t k = 0; k < perm.size(); ++k) new_shape[k] = shape_[perm[k]];
  Tensor out(new_shape);
  if (shape_.empty()) {
    out.data_[0] = data_[0];
    return out;
  }
  std::vector<std::int64_t> idx(shape_.size(), 0);
  std::vector<std::int64_t> new_idx(shape_.size(), 0);
  for (std::int64_t off = 0; off < size(); ++off) {
    for (std::size_t k = 0; k < perm.size(); ++k) new_idx[k] = idx[perm[k]];
    out.at(new_idx) = data_[static_cast<std::size_t>(off)];
    for (std::size_t k = shape_.size(); k-- > 0;) {
      if (++idx[k] < shape_[k]) break;
      idx[k] = 0;
    }
  }
  return out;
}

Tensor Tensor::traced(std::size_t ax1, std::size_t ax2) const {
  if (ax1 == ax2 || ax1 >= rank() || ax2 >= rank() ||
      shape_[ax1] != shape_[ax2]) {
    throw TensorError("invalid trace axes");
  }
  if (ax1 > ax2) std::swap(ax1, ax2);
  std::vector<std::int64_t> new_shape;
  for (std::size_t k = 0; k < rank(); ++k) {
    if (k != ax1 && k != ax2) new_shape.push_back(shape_[k]);
  }
  Tensor out(new_shape);
  std::vector<std::int64_t> idx(rank(), 0);
  std::vector<std::int64_t> out_idx;
  for (std::int64_t off = 0; off < size(); ++off) {
    if (idx[ax1] == idx[ax2]) {
      out_idx.clear();
      for (std::size_t k = 0; k < rank(); ++k) {
        if (k != ax1 && k != ax2) out_idx.push_back(idx[k]);
      }
      out.at(out_idx) += data_[static_cast<std::size_t>(off)];
    }
    for (std::size_t k = rank(); k-- > 0;) {
      if (++idx[k] < shape_[k]) break;
      idx[k] = 0;
    }
  }
  return out;
}

Tensor& Tensor::operator*=(Complex factor) {
  for (auto& v : data_) v *= factor;
  return *this;
}

double Tensor::max_abs_diff(const Tensor& other) const {
  if (shape_ != other.shape_) throw TensorError("shape mismatch in comparison");
  double m = 0.0;
  for (std::size_t i = 0; i < data_.size(); ++i) {
    m = std::max(m, std::abs(data_[i] - other.data_[i]));
  }
  return m;
}

double Tensor::norm() const {
  double s = 0.0;
  for (const auto& v : data_) s += std::norm(v);
  return std::sqrt(s);
}

Tensor contract(const Tensor& a, const std::vector<std::size_t>& axes_a,
                const Tensor& b, const std::vector<std::size_t>& axes_b) {
  if (axes_a.size() != axes_b.size()) {
    throw TensorError("contraction axis count mismatch");
  }
  for (std::size_t k = 0; k < axes_a.size(); ++k) {
    if (a.shape()[axes_a[k]] != b.shape()[axes_b[k]]) {
      throw TensorError("contraction dimension mismatch");
    }
  }

  // Move contracted axes of a to the back and of b to the front, then this
  // is one matrix product.
  std::vector<std::size_t> perm_a, perm_b;
  std::vector<std::int64_t> free_shape;
  for (std::size_t k = 0; k < a.rank(); ++k) {
    if (std::find(axes_a.begin(), axes_a.end(), k) == axes_a.end()) {
      perm_a.push_back(k);
      free_shape.push_back(a.shape()[k]);
    }
  }
  std::int64_t m = product(free_shape);
  perm_a.insert(perm_a.end(), axes_a.begin(), axes_a.end());
  perm_b.assign(axes_b.begin(), axes_b.end());
  std::int64_t contracted = 1;
  for (auto ax : axes_a) contracted *= a.shape()[ax];
  for (std::size_t k = 0; k < b.rank(); ++k) {
    if (std::find(axes_b.begin(), axes_b.end(), k) == axes_b.end()) {
      perm_b.push_back(k);
      free_shape.push_back(b.shape()[k]);
    }
  }
  std::int64_t n = product(free_shape) / std::max<std::int64_t>(m, 1);

  Tensor pa = a.permuted(perm_a);
  Tensor pb = b.permuted(perm_b);
  Tensor out(free_shape);
  using MatrixMap = Eigen::Map<const Eigen::Matrix<Complex, Eigen::Dynamic,
                                                   Eigen::Dynamic, Eigen::RowMajor>>;
  using OutMap =
      Eigen::Map<Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>>;
  MatrixMap ma(pa.data().data(), m, contracted);
  MatrixMap mb(pb.data().data(), contracted, n);
  OutMap mo(out.data().data(), m, n);
  mo = ma * mb;
  return out;
}

}  // namespace discoqc
