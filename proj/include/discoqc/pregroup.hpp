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

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace discoqc {

/// Error for malformed grammar input (unknown base type, bad adjoint suffix,
/// out-of-range linkage index, ...).
struct GrammarError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A simple (atomic) pregroup type: a basic type decorated with an adjoint
/// order z. z < 0 counts left adjoints, z > 0 right adjoints, z = 0 is plain.
struct SimpleType {
  std::string base;
  int z = 0;

  friend bool operator==(const SimpleType&, const SimpleType&) = default;
};

/// p^l: decrement the adjoint order.
SimpleType adjoint_left(const SimpleType& t);
/// p^r: increment the adjoint order.
SimpleType adjoint_right(const SimpleType& t);

/// A pregroup type: an ordered juxtaposition of simple types. The empty list
/// is the monoidal unit 1.
struct PregroupType {
  std::vector<SimpleType> simples;

  bool is_unit() const { return simples.empty(); }
  std::size_t size() const { return simples.size(); }

  friend bool operator==(const PregroupType&, const PregroupType&) = default;
};

/// Grammar configuration: the registered basic types, the target type a
/// grammatical sentence must reduce to, and an alias map (e.g. o -> n) under
/// which aliased bases share reductions, dimensions and qubit counts.
struct GrammarConfig {
  std::vector<std::string> basic_types;
  std::string target = "s";
  std::map<std::string, std::string> aliases;

  bool is_known(const std::string& base) const;
  /// Canonical base after following aliases (at most one hop).
  std::string resolve(const std::string& base) const;
  /// True when the two bases are equal after alias resolution.
  bool same_base(const std::string& a, const std::string& b) const;

  /// The three-basic-type grammar of the shipped corpus (n, s, o with o=n).
  static GrammarConfig standard();
};

/// Parses a whitespace-separated type expression. Each token is `base`,
/// `base^l`, `base^r`, or a repeated adjoint such as `n^rr` for (n^r)^r.
/// The empty string is the unit type.
PregroupType parse_type(const std::string& text, const GrammarConfig& grammar);

/// Formats a type so that parse_type(format_type(t)) == t.
std::string format_type(const PregroupType& t);
std::string format_type(const SimpleType& t);

/// The outcome of reducing a juxtaposition of word types. Indices refer to
/// the flattened simple-type sequence of the whole sentence.
struct ReductionLinkage {
  std::vector<std::pair<int, int>> cups;  // (i, j) with i < j
  std::vector<int> survivors;             // unlinked indices, in order
  std::vector<SimpleType> flat;           // the flattened sequence
  bool grammatical = false;

  std::size_t total() const { return flat.size(); }
};

/// Reduces the juxtaposed word types towards the grammar's target type.
/// Flattens all simple types in order, then repeatedly links the leftmost
/// adjacent reducible pair among the not-yet-linked indices (bases equal
/// under aliasing and z_j = z_i + 1). The sentence is grammatical iff the
/// survivors are exactly one plain target type. An ungrammatical outcome is
/// returned, not thrown.
ReductionLinkage reduce(const std::vector<PregroupType>& types,
                        const GrammarConfig& grammar);

/// True iff reduce() leaves exactly [target] standing.
bool is_grammatical(const std::vector<PregroupType>& types,
                    const GrammarConfig& grammar);

}  // namespace discoqc
