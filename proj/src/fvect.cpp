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

#include "discoqc/fvect.hpp"

#include <algorithm>
#include <limits>

namespace discoqc {

std::int64_t DimConfig::dim_of(const std::string& base,
                               const GrammarConfig& grammar) const {
  const std::string canonical = grammar.resolve(base);
  auto it = dims.find(canonical);
  if (it == dims.end()) it = dims.find(base);
  if (it == dims.end()) {
    throw TensorError("no dimension configured for basic type '" + base + "'");
  }
  return it->second;
}

Tensor eta(std::int64_t dim) { return Tensor::delta(dim); }
Tensor epsilon(std::int64_t dim) { return Tensor::delta(dim); }

namespace {

/// A tensor together with the diagram wire carried by each axis.
struct Factor {
  Tensor tensor;
  std::vector<WireId> wires;
};

/// Traces out axes that carry the same wire twice (a wire looping back into
/// the same factor after contraction).
void trace_repeats(Factor& f) {
  bool again = true;
  while (again) {
    again = false;
    for (std::size_t i = 0; i < f.wires.size() && !again; ++i) {
      for (std::size_t j = i + 1; j < f.wires.size(); ++j) {
        if (f.wires[i] == f.wires[j]) {
          f.tensor = f.tensor.traced(i, j);
          f.wires.erase(f.wires.begin() + j);
          f.wires.erase(f.wires.begin() + i);
          again = true;
          break;
        }
      }
    }
  }
}

Factor contract_factors(const Factor& a, const Factor& b) {
  std::vector<std::size_t> axes_a, axes_b;
  for (std::size_t i = 0; i < a.wires.size(); ++i) {
    for (std::size_t j = 0; j < b.wires.size(); ++j) {
      if (a.wires[i] == b.wires[j]) {
        axes_a.push_back(i);
        axes_b.push_back(j);
        break;
      }
    }
  }
  Factor out;
  out.tensor = contract(a.tensor, axes_a, b.tensor, axes_b);
  for (std::size_t i = 0; i < a.wires.size(); ++i) {
    if (std::find(axes_a.begin(), axes_a.end(), i) == axes_a.end()) {
      out.wires.push_back(a.wires[i]);
    }
  }
  for (std::size_t j = 0; j < b.wires.size(); ++j) {
    if (std::find(axes_b.begin(), axes_b.end(), j) == axes_b.end()) {
      out.wires.push_back(b.wires[j]);
    }
  }
  trace_repeats(out);
  return out;
}

}  // namespace

Tensor evaluate(const Diagram& d, const std::map<std::string, Tensor>& lexicon,
                const DimConfig& dims, const GrammarConfig& grammar) {
  auto wire_dim = [&](WireId w) {
    return dims.dim_of(d.wire_base.at(w), grammar);
  };

  std::vector<Factor> factors;
  for (const auto& node : d.nodes) {
    switch (node.kind) {
      case NodeKind::WordState:
      case NodeKind::WordEffect: {
        auto it = lexicon.find(node.word);
        if (it == lexicon.end()) {
          throw TensorError("no tensor for word '" + node.word + "'");
        }
        const Tensor& t = it->second;
        if (t.rank() != node.ports.size()) {
          throw TensorError("tensor rank mismatch for word '" + node.word + "'");
        }
        for (std::size_t k = 0; k < node.ports.size(); ++k) {
          if (t.shape()[k] != wire_dim(node.ports[k])) {
            throw TensorError("tensor shape mismatch for word '" + node.word +
                              "'");
          }
        }
        Factor f{t, node.ports};
        trace_repeats(f);
        factors.push_back(std::move(f));
        break;
      }
      case NodeKind::Cup:
      case NodeKind::Cap: {
        std::int64_t dim = wire_dim(node.ports[0]);
        if (dim != wire_dim(node.ports[1])) {
          throw TensorError("cup/cap joins wires of different dimension");
        }
        Factor f{Tensor::delta(dim), node.ports};
        trace_repeats(f);
        factors.push_back(std::move(f));
        break;
      }
      case NodeKind::Swap: {
        // A crossing is two identity wires: in_left->out_right,
        // in_right->out_left.
        factors.push_back(Factor{Tensor::delta(wire_dim(node.ports[0])),
                                 {node.ports[0], node.ports[3]}});
        factors.push_back(Factor{Tensor::delta(wire_dim(node.ports[1])),
                                 {node.ports[1], node.ports[2]}});
        break;
      }
    }
  }
  if (factors.empty()) factors.push_back(Factor{Tensor::scalar(1.0), {}});

  // Greedy pairwise contraction, smallest intermediate first. Falls back to
  // outer products once no factors share a wire (disconnected components).
  while (factors.size() > 1) {
    std::size_t best_i = 0, best_j = 1;
    std::int64_t best_size = std::numeric_limits<std::int64_t>::max();
    bool found_shared = false;
    for (std::size_t i = 0; i < factors.size(); ++i) {
      for (std::size_t j = i + 1; j < factors.size(); ++j) {
        std::int64_t shared = 1;
        bool any = false;
        for (WireId w : factors[i].wires) {
          if (std::find(factors[j].wires.begin(), factors[j].wires.end(), w) !=
              factors[j].wires.end()) {
            shared *= wire_dim(w);
            any = true;
          }
        }
        if (!any) continue;
        std::int64_t result_size =
            factors[i].tensor.size() * factors[j].tensor.size() / (shared * shared);
        if (result_size < best_size) {
          best_size = result_size;
          best_i = i;
          best_j = j;
          found_shared = true;
        }
      }
    }
    if (!found_shared) {
      // Outer product of the two smallest factors.
      std::sort(factors.begin(), factors.end(),
                [](const Factor& a, const Factor& b) {
                  return a.tensor.size() < b.tensor.size();
                });
      best_i = 0;
      best_j = 1;
    }
    Factor merged = contract_factors(factors[best_i], factors[best_j]);
    factors.erase(factors.begin() + best_j);
    factors.erase(factors.begin() + best_i);
    factors.push_back(std::move(merged));
  }

  Factor& result = factors[0];
  if (result.wires.size() != d.outputs.size()) {
    throw TensorError("evaluation left wrong number of open wires");
  }
  std::vector<std::size_t> perm;
  for (WireId w : d.outputs) {
    auto it = std::find(result.wires.begin(), result.wires.end(), w);
    if (it == result.wires.end()) {
      throw TensorError("output wire missing from evaluation result");
    }
    perm.push_back(static_cast<std::size_t>(it - result.wires.begin()));
  }
  return result.tensor.permuted(perm);
}

Tensor truth_verb(const TruthVerbSpec& spec, std::int64_t n_dim) {
  if (spec.alpha.rows() != n_dim || spec.alpha.cols() != n_dim) {
    throw TensorError("alpha matrix does not match the noun dimension");
  }
  Tensor t({n_dim, n_dim, 1});
  for (std::int64_t j = 0; j < n_dim; ++j) {
    for (std::int64_t i = 0; i < n_dim; ++i) {
      t.at({j, i, 0}) = spec.alpha(j, i);
    }
  }
  return t;
}

double truth_sentence_meaning(const std::vector<int>& sub_indices,
                              const std::vector<int>& obj_indices,
                              const TruthVerbSpec& spec) {
  double total = 0.0;
  for (int l : obj_indices) {
    for (int k : sub_indices) {
      if (l < 0 || l >= spec.alpha.rows() || k < 0 || k >= spec.alpha.cols()) {
        throw TensorError("truth meaning index out of range");
      }
      total += spec.alpha(l, k);
    }
  }
  return total;
}

Tensor verb_from_corpus(
    const std::vector<std::pair<WordVector, WordVector>>& obj_sub_pairs) {
  if (obj_sub_pairs.empty()) throw TensorError("empty verb corpus");
  const auto rows = obj_sub_pairs.front().first.size();
  const auto cols = obj_sub_pairs.front().second.size();
  Tensor t({rows, cols});
  for (const auto& [obj, sub] : obj_sub_pairs) {
    if (obj.size() != rows || sub.size() != cols) {
      throw TensorError("inconsistent vector lengths in verb corpus");
    }
    for (std::int64_t j = 0; j < rows; ++j) {
      for (std::int64_t i = 0; i < cols; ++i) {
        t.at({j, i}) += obj(j) * sub(i);
      }
    }
  }
  return t;
}

Tensor pointwise_meaning(const WordVector& obj, const WordVector& sub,
                         const Tensor& verb) {
  if (verb.rank() != 2 || verb.shape()[0] != obj.size() ||
      verb.shape()[1] != sub.size()) {
    throw TensorError("verb matrix does not match the word vectors");
  }
  Tensor t({obj.size(), sub.size()});
  for (std::int64_t j = 0; j < obj.size(); ++j) {
    for (std::int64_t i = 0; i < sub.size(); ++i) {
      t.at({j, i}) = obj(j) * sub(i) * verb.at({j, i});
    }
  }
  return t;
}

}  // namespace discoqc
