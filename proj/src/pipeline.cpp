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

#include "discoqc/pipeline.hpp"

#include <algorithm>

#include "discoqc/json_io.hpp"

namespace discoqc {

std::vector<std::pair<std::string, PregroupType>> lookup_words(
    const Lexicon& lexicon, const std::string& sentence) {
  std::vector<std::pair<std::string, PregroupType>> out;
  for (const auto& token : tokenize(sentence)) {
    out.emplace_back(token, lexicon.word(token).type);
  }
  if (out.empty()) throw LexiconError("empty sentence");
  return out;
}

ReductionLinkage parse_sentence(const Lexicon& lexicon,
                                const std::string& sentence) {
  std::vector<PregroupType> types;
  for (const auto& [text, type] : lookup_words(lexicon, sentence)) {
    types.push_back(type);
  }
  return reduce(types, lexicon.grammar);
}

Diagram rewrite_diagram(const Lexicon& lexicon, const Diagram& d,
                        RewriteMode mode) {
  if (mode == RewriteMode::None) return d;
  Diagram capped = substitute_cap_words(d, lexicon.cap_word_texts(), lexicon.grammar);
  return snake_removal(capped);
}

TransitiveSentence analyze_transitive(const Lexicon& lexicon,
                                      const std::string& sentence) {
  auto words = lookup_words(lexicon, sentence);
  std::vector<PregroupType> types;
  for (const auto& [text, type] : words) types.push_back(type);
  ReductionLinkage linkage = reduce(types, lexicon.grammar);
  if (!linkage.grammatical) {
    throw UngrammaticalError("sentence is not grammatical: " + sentence);
  }
  Diagram d = from_reduction(words, linkage);
  d = substitute_cap_words(d, lexicon.cap_word_texts(), lexicon.grammar);
  d = snake_removal(d);

  const GrammarConfig& grammar = lexicon.grammar;
  // The verb is the root; after cap substitution each of its noun legs is
  // cupped directly with a noun word.
  std::size_t verb_index = d.nodes.size();
  for (std::size_t i : d.word_node_indices()) {
    for (const auto& st : d.nodes[i].type.simples) {
      if (st.z == 0 && grammar.same_base(st.base, grammar.target)) {
        if (verb_index != d.nodes.size()) {
          throw LexiconError("sentence has more than one verb");
        }
        verb_index = i;
      }
    }
  }
  if (verb_index == d.nodes.size()) {
    throw LexiconError("sentence has no verb");
  }

  TransitiveSentence result;
  result.verb = d.nodes[verb_index].word;
  auto noun_at_other_end = [&](WireId leg_wire) -> std::string {
    for (const auto& node : d.nodes) {
      if (node.kind != NodeKind::Cup) continue;
      WireId other;
      if (node.ports[0] == leg_wire) {
        other = node.ports[1];
      } else if (node.ports[1] == leg_wire) {
        other = node.ports[0];
      } else {
        continue;
      }
      for (std::size_t i : d.word_node_indices()) {
        if (i == verb_index) continue;
        const auto& ports = d.nodes[i].ports;
        if (std::find(ports.begin(), ports.end(), other) != ports.end()) {
          if (d.nodes[i].type.size() != 1) {
            throw LexiconError("verb argument '" + d.nodes[i].word +
                               "' is not a plain noun");
          }
          return d.nodes[i].word;
        }
      }
    }
    throw LexiconError("verb leg is not linked to a noun");
  };

  const Node& verb = d.nodes[verb_index];
  for (std::size_t k = 0; k < verb.type.simples.size(); ++k) {
    const SimpleType& st = verb.type.simples[k];
    if (st.z == 0 && grammar.same_base(st.base, grammar.target)) continue;
    // An aliased base (an object type with o=n) marks the object; otherwise
    // the right adjoint consumes the subject and the left adjoint the object.
    bool is_object = grammar.resolve(st.base) != st.base || st.z < 0;
    std::string noun = noun_at_other_end(verb.ports[k]);
    std::string& slot = is_object ? result.object : result.subject;
    if (!slot.empty()) {
      throw LexiconError("sentence is not a positive transitive sentence");
    }
    slot = noun;
  }
  if (result.subject.empty() || result.object.empty()) {
    throw LexiconError("sentence is not a positive transitive sentence");
  }
  return result;
}

SentenceRun run_pipeline(const Lexicon& lexicon, const std::string& sentence,
                         const PipelineOptions& options, ParameterStore& store) {
  SentenceRun run;
  run.words = lookup_words(lexicon, sentence);
  for (const auto& [text, type] : run.words) {
    if (lexicon.word(text).role == WordRole::TensorLiteral) {
      throw LexiconError("word '" + text +
                         "' carries a literal tensor and has no circuit ansatz");
    }
  }
  std::vector<PregroupType> types;
  for (const auto& [text, type] : run.words) types.push_back(type);
  run.linkage = reduce(types, lexicon.grammar);
  if (!run.linkage.grammatical) {
    throw UngrammaticalError("sentence is not grammatical: " + sentence);
  }
  run.diagram = from_reduction(run.words, run.linkage);

  switch (options.form) {
    case PipelineForm::Bigraph: {
      Diagram pre = rewrite_diagram(lexicon, run.diagram, options.rewrite);
      run.rewritten = bigraph_rewrite(pre, lexicon.grammar);
      run.circuit =
          compile_bigraph(run.rewritten, lexicon.qubits, lexicon.grammar, store);
      break;
    }
    case PipelineForm::GrammarMeaning:
    case PipelineForm::Choi: {
      run.rewritten = rewrite_diagram(lexicon, run.diagram, RewriteMode::Snake);
      TransitiveSentence analysis = analyze_transitive(lexicon, sentence);
      Circuit gm = compile_grammar_meaning(analysis, lexicon.qubits, store);
      run.circuit = options.form == PipelineForm::Choi ? choi_form(gm) : gm;
      break;
    }
  }
  return run;
}

Tensor word_ansatz_tensor(const Lexicon& lexicon, const LexiconWord& word,
                          ParameterStore& store) {
  int n = qubit_count(word.type, lexicon.qubits, lexicon.grammar);
  Circuit ansatz = word_state_ansatz(word.text, n, lexicon.qubits.ansatz_depth, store);
  MeaningState state = simulate(ansatz, store);
  std::vector<int> widths;
  for (const auto& st : word.type.simples) {
    widths.push_back(lexicon.qubits.qubits_of(st.base, lexicon.grammar));
  }
  return state_to_tensor(state.amplitudes, widths);
}

std::map<std::string, Tensor> diagram_word_tensors(const Lexicon& lexicon,
                                                   const Diagram& d,
                                                   ParameterStore& store,
                                                   bool caps_as_delta) {
  DimConfig dims = qubit_dims(lexicon);
  std::map<std::string, Tensor> out;
  for (std::size_t i : d.word_node_indices()) {
    const std::string& text = d.nodes[i].word;
    if (out.count(text)) continue;
    const LexiconWord& word = lexicon.word(text);
    if (word.role == WordRole::TensorLiteral) {
      out[text] = *word.tensor;
    } else if (word.role == WordRole::CapWord && caps_as_delta) {
      out[text] =
          Tensor::delta(dims.dim_of(word.type.simples.at(0).base, lexicon.grammar));
    } else {
      out[text] = word_ansatz_tensor(lexicon, word, store);
    }
  }
  return out;
}

DimConfig qubit_dims(const Lexicon& lexicon) {
  DimConfig dims;
  for (const auto& [base, count] : lexicon.qubits.qubits) {
    dims.dims[base] = std::int64_t(1) << count;
  }
  return dims;
}

std::vector<int> output_widths(const Lexicon& lexicon, const Diagram& d) {
  std::vector<int> widths;
  for (WireId w : d.outputs) {
    widths.push_back(lexicon.qubits.qubits_of(d.wire_base.at(w), lexicon.grammar));
  }
  return widths;
}

std::string meaning_to_json(const MeaningState& state) {
  JsonWriter w;
  w.begin_object();
  w.key("open_qubits").begin_array();
  for (int q : state.open_qubits) w.value(q);
  w.end_array();
  w.key("amplitudes").begin_array();
  for (Eigen::Index i = 0; i < state.amplitudes.size(); ++i) {
    w.begin_array()
        .value(state.amplitudes(i).real())
        .value(state.amplitudes(i).imag())
        .end_array();
  }
  w.end_array();
  w.key("scalar").value(state.scalar);
  w.end_object();
  return w.str() + "\n";
}

}  // namespace discoqc
