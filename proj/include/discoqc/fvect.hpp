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

#include <map>
#include <string>
#include <vector>

#include "discoqc/diagram.hpp"
#include "discoqc/tensor.hpp"

namespace discoqc {

/// Vector-space dimension per basic type (F(n)=N, F(s)=S). Aliased types
/// share the dimension of their canonical base.
struct DimConfig {
  std::map<std::string, std::int64_t> dims;

  std::int64_t dim_of(const std::string& base, const GrammarConfig& grammar) const;
};

/// eta: 1 |-> sum_i e_i (x) e_i, as an order-2 tensor.
Tensor eta(std::int64_t dim);
/// epsilon: sum_ij c_ij v_i (x) w_j |-> sum_ij c_ij <v_i|w_j>. Same delta
/// tensor as eta; cups contract bilinearly (no conjugation).
Tensor epsilon(std::int64_t dim);

/// Contracts the port graph: word tensors at word nodes, cups/caps as the
/// delta tensor, swaps as wire crossings. Returns the tensor on the output
/// wires, a scalar when there are none. Contraction order is a greedy
/// smallest-intermediate heuristic; diagrams here are tiny.
Tensor evaluate(const Diagram& d, const std::map<std::string, Tensor>& lexicon,
                const DimConfig& dims, const GrammarConfig& grammar);

/// Truth-theoretic verb: alpha(j, i) is the degree of truth of object j
/// relating to subject i; S is one-dimensional.
struct TruthVerbSpec {
  Eigen::MatrixXd alpha;  // rows: object index j, cols: subject index i
};

/// Order-3 tensor with entries [j, i, 0] = alpha_ji.
Tensor truth_verb(const TruthVerbSpec& spec, std::int64_t n_dim);

/// Closed form of the truth-theoretic sentence meaning: the sum of alpha
/// over the object/subject basis subsets. Equals evaluate() on the
/// assembled sentence diagram.
double truth_sentence_meaning(const std::vector<int>& sub_indices,
                              const std::vector<int>& obj_indices,
                              const TruthVerbSpec& spec);

/// A distributional word vector over context basis vectors.
using WordVector = Eigen::VectorXd;

/// Sum over the corpus of object (x) subject outer products; the order-2
/// verb matrix c_ji.
Tensor verb_from_corpus(
    const std::vector<std::pair<WordVector, WordVector>>& obj_sub_pairs);

/// (obj (x) sub) .* verb, elementwise; verb is an order-2 tensor indexed
/// [object j][subject i].
Tensor pointwise_meaning(const WordVector& obj, const WordVector& sub,
                         const Tensor& verb);

}  // namespace discoqc
