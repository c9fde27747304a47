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

#include "discoqc/lexicon.hpp"
#include "discoqc/simulator.hpp"

namespace discoqc {

enum class PipelineForm { Bigraph, GrammarMeaning, Choi };
enum class RewriteMode { None, Snake };

struct PipelineOptions {
  PipelineForm form = PipelineForm::Bigraph;
  RewriteMode rewrite = RewriteMode::None;
};

/// All artifacts of a parse -> diagram -> rewrite -> compile run.
struct SentenceRun {
  std::vector<std::pair<std::string, PregroupType>> words;
  ReductionLinkage linkage;
  Diagram diagram;    // straight from the reduction
  Diagram rewritten;  // after cap substitution / snake removal / bigraph
  Circuit circuit;
};

/// Looks up every token in the lexicon and reduces the sentence.
std::vector<std::pair<std::string, PregroupType>> lookup_words(
    const Lexicon& lexicon, const std::string& sentence);

ReductionLinkage parse_sentence(const Lexicon& lexicon, const std::string& sentence);

/// Applies the requested rewrite chain to a fresh sentence diagram: Snake
/// substitutes the lexicon's cap words and removes snakes; None keeps every
/// word in place.
Diagram rewrite_diagram(const Lexicon& lexicon, const Diagram& d, RewriteMode mode);

/// Identifies subject/object/verb of a positive transitive sentence: the
/// verb is the root word, the subject noun reaches its right-adjoint noun
/// leg, the object noun its object-typed (or left-adjoint) leg; cap words
/// are ignored.
TransitiveSentence analyze_transitive(const Lexicon& lexicon,
                                      const std::string& sentence);

/// The full pipeline for one sentence. Ungrammatical input throws.
SentenceRun run_pipeline(const Lexicon& lexicon, const std::string& sentence,
                         const PipelineOptions& options, ParameterStore& store);

/// The state tensor of a word's CNOT+U(3) ansatz, with one axis per simple
/// type of the word (axis dimension 2^qubits).
Tensor word_ansatz_tensor(const Lexicon& lexicon, const LexiconWord& word,
                          ParameterStore& store);

/// Tensor assignment for every word of a diagram: literals verbatim, ansatz
/// and cap words as their ansatz state tensors; with `caps_as_delta`, cap
/// words get the delta tensor instead.
std::map<std::string, Tensor> diagram_word_tensors(const Lexicon& lexicon,
                                                   const Diagram& d,
                                                   ParameterStore& store,
                                                   bool caps_as_delta);

/// Dimensions of the qubit view: 2^qubits per basic type.
DimConfig qubit_dims(const Lexicon& lexicon);

/// Qubit widths of a diagram's output wires under the lexicon's QubitConfig.
std::vector<int> output_widths(const Lexicon& lexicon, const Diagram& d);

std::string meaning_to_json(const MeaningState& state);

}  // namespace discoqc
