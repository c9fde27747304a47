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

#include "discoqc/lexicon.hpp"

#include <sstream>

#include <json.hpp>

#include "discoqc/json_io.hpp"

namespace discoqc {

const LexiconWord& Lexicon::word(const std::string& text) const {
  for (const auto& w : words) {
    if (w.text == text) return w;
  }
  throw LexiconError("unknown word '" + text + "'");
}

bool Lexicon::has_word(const std::string& text) const {
  for (const auto& w : words) {
    if (w.text == text) return true;
  }
  return false;
}

std::set<std::string> Lexicon::cap_word_texts() const {
  std::set<std::string> out;
  for (const auto& w : words) {
    if (w.role == WordRole::CapWord) out.insert(w.text);
  }
  return out;
}

namespace {

LexiconWord make_word(const GrammarConfig& grammar, std::string text,
                      std::string language, std::string type_text,
                      WordRole role) {
  LexiconWord w;
  w.text = std::move(text);
  w.language = std::move(language);
  w.type_text = std::move(type_text);
  w.type = parse_type(w.type_text, grammar);
  w.role = role;
  return w;
}

}  // namespace

Lexicon Lexicon::builtin() {
  Lexicon lex;
  lex.grammar = GrammarConfig::standard();
  lex.qubits.qubits = {{"n", 1}, {"s", 1}};
  lex.qubits.ansatz_depth = 1;
  lex.dims.dims = {{"n", 2}, {"s", 2}};
  lex.words = {
      make_word(lex.grammar, "Sara", "fa", "n", WordRole::Ansatz),
      make_word(lex.grammar, "ketab", "fa", "n", WordRole::Ansatz),
      make_word(lex.grammar, "ra", "fa", "n^r o", WordRole::CapWord),
      make_word(lex.grammar, "kharid", "fa", "o^r n^r s", WordRole::Ansatz),
      make_word(lex.grammar, "Sara", "en", "n", WordRole::Ansatz),
      make_word(lex.grammar, "bought", "en", "n^r s n^l", WordRole::Ansatz),
      make_word(lex.grammar, "the", "en", "n n^l", WordRole::CapWord),
      make_word(lex.grammar, "book", "en", "n", WordRole::Ansatz),
  };
  lex.pairs = {{"Sara ketab ra kharid", "Sara bought the book"}};
  return lex;
}

Lexicon Lexicon::from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  if (!j.contains("schema") || j.at("schema").get<int>() != 1) {
    throw LexiconError("lexicon schema must be 1");
  }
  Lexicon lex;
  const auto& jg = j.at("grammar");
  for (const auto& b : jg.at("basic_types")) {
    lex.grammar.basic_types.push_back(b.get<std::string>());
  }
  lex.grammar.target = jg.at("target").get<std::string>();
  if (jg.contains("aliases")) {
    for (const auto& [from, to] : jg.at("aliases").items()) {
      lex.grammar.aliases[from] = to.get<std::string>();
    }
  }
  for (const auto& [base, count] : j.at("qubits").items()) {
    lex.qubits.qubits[base] = count.get<int>();
  }
  lex.qubits.ansatz_depth =
      j.contains("ansatz_depth") ? j.at("ansatz_depth").get<int>() : 1;
  if (j.contains("dims")) {
    for (const auto& [base, dim] : j.at("dims").items()) {
      lex.dims.dims[base] = dim.get<std::int64_t>();
    }
  } else {
    for (const auto& [base, count] : lex.qubits.qubits) {
      lex.dims.dims[base] = std::int64_t(1) << count;
    }
  }
  for (const auto& jw : j.at("words")) {
    LexiconWord w;
    w.text = jw.at("text").get<std::string>();
    w.language = jw.contains("language") ? jw.at("language").get<std::string>() : "";
    w.type_text = jw.at("type").get<std::string>();
    w.type = parse_type(w.type_text, lex.grammar);
    std::string role = jw.contains("role") ? jw.at("role").get<std::string>() : "ansatz";
    if (role == "ansatz") {
      w.role = WordRole::Ansatz;
    } else if (role == "cap") {
      w.role = WordRole::CapWord;
    } else if (role == "tensor") {
      w.role = WordRole::TensorLiteral;
      const auto& jt = jw.at("tensor");
      std::vector<std::int64_t> shape;
      for (const auto& d : jt.at("shape")) shape.push_back(d.get<std::int64_t>());
      Tensor t(shape);
      const auto& entries = jt.at("entries");
      if (static_cast<std::int64_t>(entries.size()) != t.size()) {
        throw LexiconError("tensor entry count does not match its shape for '" +
                           w.text + "'");
      }
      for (std::int64_t i = 0; i < t.size(); ++i) {
        const auto& e = entries[static_cast<std::size_t>(i)];
        t.flat(i) = Complex(e.at(0).get<double>(), e.at(1).get<double>());
      }
      if (t.rank() != w.type.size()) {
        throw LexiconError("tensor rank does not match the type of '" + w.text +
                           "'");
      }
      for (std::size_t k = 0; k < w.type.simples.size(); ++k) {
        if (t.shape()[k] !=
            lex.dims.dim_of(w.type.simples[k].base, lex.grammar)) {
          throw LexiconError("tensor shape does not match the dims for '" +
                             w.text + "'");
        }
      }
      w.tensor = std::move(t);
    } else {
      throw LexiconError("unknown word role '" + role + "'");
    }
    lex.words.push_back(std::move(w));
  }
  if (j.contains("pairs")) {
    for (const auto& jp : j.at("pairs")) {
      lex.pairs.emplace_back(jp.at(0).get<std::string>(),
                             jp.at(1).get<std::string>());
    }
  }
  return lex;
}

std::vector<std::string> tokenize(const std::string& sentence) {
  std::vector<std::string> out;
  std::istringstream in(sentence);
  std::string token;
  while (in >> token) out.push_back(token);
  return out;
}

std::string lexicon_to_json(const Lexicon& lexicon) {
  JsonWriter w;
  w.begin_object();
  w.key("schema").value(1);
  w.key("grammar").begin_object();
  w.key("basic_types").begin_array();
  for (const auto& b : lexicon.grammar.basic_types) w.value(b);
  w.end_array();
  w.key("target").value(lexicon.grammar.target);
  w.key("aliases").begin_object();
  for (const auto& [from, to] : lexicon.grammar.aliases) w.key(from).value(to);
  w.end_object();
  w.end_object();
  w.key("qubits").begin_object();
  for (const auto& [base, count] : lexicon.qubits.qubits) w.key(base).value(count);
  w.end_object();
  w.key("ansatz_depth").value(lexicon.qubits.ansatz_depth);
  w.key("dims").begin_object();
  for (const auto& [base, dim] : lexicon.dims.dims) w.key(base).value(dim);
  w.end_object();
  w.key("words").begin_array();
  for (const auto& word : lexicon.words) {
    w.begin_object();
    w.key("text").value(word.text);
    w.key("language").value(word.language);
    w.key("type").value(word.type_text);
    switch (word.role) {
      case WordRole::Ansatz: w.key("role").value("ansatz"); break;
      case WordRole::CapWord: w.key("role").value("cap"); break;
      case WordRole::TensorLiteral: {
        w.key("role").value("tensor");
        w.key("tensor").begin_object();
        w.key("shape").begin_array();
        for (auto d : word.tensor->shape()) w.value(d);
        w.end_array();
        w.key("entries").begin_array();
        for (std::int64_t i = 0; i < word.tensor->size(); ++i) {
          Complex v = word.tensor->flat(i);
          w.begin_array().value(v.real()).value(v.imag()).end_array();
        }
        w.end_array();
        w.end_object();
        break;
      }
    }
    w.end_object();
  }
  w.end_array();
  w.key("pairs").begin_array();
  for (const auto& [a, b] : lexicon.pairs) {
    w.begin_array().value(a).value(b).end_array();
  }
  w.end_array();
  w.end_object();
  return w.str() + "\n";
}

}  // namespace discoqc
