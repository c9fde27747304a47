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

#include <optional>
#include <set>

#include "discoqc/compiler.hpp"
#include "discoqc/fvect.hpp"

namespace discoqc {

struct LexiconError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A sentence whose types do not reduce to the target; CLI commands report
/// this as a negative result (exit 1), not a data error.
struct UngrammaticalError : LexiconError {
  using LexiconError::LexiconError;
};

/// How a word's meaning is provided: a literal tensor, a parametrised
/// ansatz, or a cap word (objective sign / article) that the snake rewrite
/// may replace by a cap and that otherwise compiles as an ansatz.
enum class WordRole { TensorLiteral, Ansatz, CapWord };

struct LexiconWord {
  std::string text;
  std::string language;
  PregroupType type;
  std::string type_text;
  WordRole role = WordRole::Ansatz;
  std::optional<Tensor> tensor;
};

/// The grammar, dimension/qubit configuration, vocabulary and sentence
/// pairs driving a pipeline run. Words are matched by exact surface string;
/// parameters are shared between identical surface strings across languages.
struct Lexicon {
  GrammarConfig grammar;
  QubitConfig qubits;
  DimConfig dims;  // derived as 2^qubits when the file omits it
  std::vector<LexiconWord> words;
  std::vector<std::pair<std::string, std::string>> pairs;

  const LexiconWord& word(const std::string& text) const;
  bool has_word(const std::string& text) const;
  std::set<std::string> cap_word_texts() const;

  /// The shipped corpus: the Persian/English transitive pair with one-qubit
  /// nouns and a one-qubit sentence space.
  static Lexicon builtin();
  static Lexicon from_json(const std::string& text);
};

std::vector<std::string> tokenize(const std::string& sentence);

std::string lexicon_to_json(const Lexicon& lexicon);

}  // namespace discoqc
