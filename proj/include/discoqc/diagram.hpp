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
#include <set>
#include <string>
#include <vector>

#include "discoqc/pregroup.hpp"

namespace discoqc {

struct DiagramError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

using WireId = int;

enum class NodeKind { WordState, WordEffect, Cup, Cap, Swap };

/// A node of the string-diagram port graph. `ports` are wire ids:
///   WordState / WordEffect : one port per flattened simple type, in order
///   Cup / Cap              : exactly two ports of the same base type
///   Swap                   : [in_left, in_right, out_left, out_right],
///                            out_left carries in_right and vice versa
struct Node {
  NodeKind kind;
  std::string word;    // set for WordState/WordEffect (and caps made from words)
  PregroupType type;   // set for WordState/WordEffect
  std::vector<WireId> ports;
};

/// A string diagram stored as a port graph. Every wire id has exactly two
/// endpoints among node ports and the outputs list; layering is computed on
/// demand (export, compilation), not stored.
struct Diagram {
  std::vector<Node> nodes;
  std::vector<WireId> outputs;              // the open sentence wires, in order
  std::map<WireId, std::string> wire_base;  // base type per wire

  WireId fresh_wire(const std::string& base);
  /// Throws DiagramError when the two-endpoint invariant is violated.
  void validate() const;

  std::vector<std::size_t> word_node_indices() const;
};

/// Builds the sentence diagram from a reduction: one WordState per word, one
/// Cup per linkage pair, survivors become the outputs.
Diagram from_reduction(
    const std::vector<std::pair<std::string, PregroupType>>& words,
    const ReductionLinkage& linkage);

/// Replaces each named word (whose type must be two wires of one base, up to
/// aliasing) by a Cap node. Meaning is unchanged when the word's tensor is
/// the delta tensor sum_i e_i (x) e_i.
Diagram substitute_cap_words(const Diagram& d,
                             const std::set<std::string>& cap_words,
                             const GrammarConfig& grammar);

/// Yanking: repeatedly straightens every cup-cap zig-zag into an identity
/// wire until fixpoint.
Diagram snake_removal(const Diagram& d);

/// BFS distances from the root word (the unique word whose type contains the
/// plain target type) on the word-adjacency graph: words are adjacent iff
/// joined by a chain of cups/caps. Keyed by surface text; a sentence that
/// repeats a word keeps the distance of its last occurrence.
std::map<std::string, int> distance_from_root(const Diagram& d,
                                              const GrammarConfig& grammar);

/// The bigraph rewrite: words at odd distance from the root are transposed
/// into effects, cup/cap chains become identity wires from state ports down
/// to effect ports, and Swap nodes planarize the resulting bipartite wiring
/// (fixed bubble-sort wire ordering). Runs snake_removal first. Meaning is
/// preserved (effects contract bilinearly with the same tensors).
Diagram bigraph_rewrite(const Diagram& d, const GrammarConfig& grammar);

/// True when the diagram is in bipartite state->effect normal form: only
/// word states, word effects and swaps, every wire flowing downward.
bool is_bipartite_normal(const Diagram& d);

/// Renumbers wires in first-use order over nodes then outputs, so two
/// structurally identical diagrams compare equal.
Diagram canonical_renumber(const Diagram& d);
bool diagram_equal(const Diagram& a, const Diagram& b);

std::string to_dot(const Diagram& d);

}  // namespace discoqc
