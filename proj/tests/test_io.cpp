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

#include <doctest.h>

#include "corpus.hpp"
#include "discoqc/json_io.hpp"
#include "oracles.hpp"

using namespace discoqc;
using namespace discoqc::testing;

TEST_CASE("doubles survive the 17-digit formatting") {
  UniformRng rng(1);
  for (int trial = 0; trial < 200; ++trial) {
    double x = (2.0 * rng.next_unit() - 1.0) * std::pow(10.0, (trial % 21) - 10);
    CHECK(std::stod(format_double(x)) == x);
  }
}

TEST_CASE("diagram json round-trips") {
  Lexicon lexicon = Lexicon::builtin();
  for (const char* sentence : {kPersian, kEnglish}) {
    Diagram d = sentence_diagram(lexicon, sentence);
    Diagram back = parse_diagram_json(diagram_to_json(d));
    CHECK(diagram_equal(d, back));

    Diagram big = bigraph_rewrite(d, lexicon.grammar);
    CHECK(diagram_equal(big, parse_diagram_json(diagram_to_json(big))));
  }
}

TEST_CASE("params json round-trips including frozen names") {
  ParameterStore store;
  store.set("a.0.0.z", 0.1234567890123456789);
  store.set("b.0.0.x", -2.5);
  store.freeze("b.0.0.x");
  ParameterStore back = parse_params_json(params_to_json(store));
  CHECK(back.values() == store.values());
  CHECK(back.is_frozen("b.0.0.x"));
}

TEST_CASE("lexicon json round-trips the builtin corpus") {
  Lexicon lexicon = Lexicon::builtin();
  Lexicon back = Lexicon::from_json(lexicon_to_json(lexicon));
  CHECK(back.words.size() == lexicon.words.size());
  CHECK(back.pairs == lexicon.pairs);
  CHECK(back.grammar.aliases == lexicon.grammar.aliases);
  for (std::size_t i = 0; i < lexicon.words.size(); ++i) {
    CHECK(back.words[i].text == lexicon.words[i].text);
    CHECK(back.words[i].type == lexicon.words[i].type);
    CHECK(back.words[i].role == lexicon.words[i].role);
  }
}

TEST_CASE("tensor-literal words parse from lexicon json") {
  const char* text = R"({
    "schema": 1,
    "grammar": {"basic_types": ["n", "s"], "target": "s"},
    "qubits": {"n": 1, "s": 1},
    "words": [
      {"text": "thing", "type": "n", "role": "tensor",
       "tensor": {"shape": [2], "entries": [[0.5, 0.0], [0.0, -1.5]]}}
    ]
  })";
  Lexicon lex = Lexicon::from_json(text);
  REQUIRE(lex.words.size() == 1);
  REQUIRE(lex.words[0].tensor.has_value());
  CHECK(lex.words[0].tensor->at({0}) == Complex(0.5, 0.0));
  CHECK(lex.words[0].tensor->at({1}) == Complex(0.0, -1.5));

  CHECK_THROWS_AS(Lexicon::from_json("{\"schema\": 2}"), LexiconError);

  // Literal-tensor words evaluate but do not compile.
  ParameterStore store;
  PipelineOptions options{PipelineForm::Bigraph, RewriteMode::None};
  CHECK_THROWS_WITH_AS(run_pipeline(lex, "thing", options, store),
                       doctest::Contains("literal tensor"), LexiconError);
}

TEST_CASE("linkage json names the survivors") {
  Lexicon lexicon = Lexicon::builtin();
  ReductionLinkage linkage = parse_sentence(lexicon, kPersian);
  std::string json = linkage_to_json(linkage);
  CHECK(json.find("\"grammatical\": true") != std::string::npos);
  CHECK(json.find("\"survivors\"") != std::string::npos);
}

TEST_CASE("meaning json carries open qubits, amplitudes and the scalar") {
  Lexicon lexicon = Lexicon::builtin();
  ParameterStore store;
  PipelineOptions options{PipelineForm::Bigraph, RewriteMode::None};
  SentenceRun run = run_pipeline(lexicon, kPersian, options, store);
  MeaningState state = simulate(run.circuit, store);
  std::string json = meaning_to_json(state);
  CHECK(json.find("\"open_qubits\"") != std::string::npos);
  CHECK(json.find("\"amplitudes\"") != std::string::npos);
  CHECK(json.find("\"scalar\"") != std::string::npos);
}

TEST_CASE("a compiled circuit file simulates exactly like the in-process run") {
  Lexicon lexicon = Lexicon::builtin();
  ParameterStore store;
  for (PipelineForm form :
       {PipelineForm::Bigraph, PipelineForm::GrammarMeaning, PipelineForm::Choi}) {
    PipelineOptions options{form, RewriteMode::None};
    SentenceRun run = run_pipeline(lexicon, kPersian, options, store);
    store.randomize(run.circuit.params, 99);
    Circuit reloaded =
        parse_circuit_json(export_circuit(run.circuit, CircuitFormat::Json));
    MeaningState direct = simulate(run.circuit, store);
    MeaningState via_file = simulate(reloaded, store);
    REQUIRE(direct.amplitudes.size() == via_file.amplitudes.size());
    for (Eigen::Index i = 0; i < direct.amplitudes.size(); ++i) {
      CHECK(direct.amplitudes(i) == via_file.amplitudes(i));  // bit-exact
    }
  }
}

TEST_CASE("random circuits round-trip through the json export") {
  UniformRng rng(2);
  ParameterStore store;
  for (int trial = 0; trial < 20; ++trial) {
    int n = 1 + static_cast<int>(rng.next_raw() % 3);
    Circuit c = word_state_ansatz("w" + std::to_string(trial), n,
                                  1 + static_cast<int>(rng.next_raw() % 2), store);
    c.metadata.scalar = rng.next_unit() + 0.5;
    c.metadata.form = "ansatz";
    Circuit back = parse_circuit_json(export_circuit(c, CircuitFormat::Json));
    CHECK(back == c);
  }
}
