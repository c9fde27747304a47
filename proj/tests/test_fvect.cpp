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
#include "oracles.hpp"

using namespace discoqc;
using namespace discoqc::testing;

namespace {

GrammarConfig grammar() { return GrammarConfig::standard(); }

DimConfig dims_n(std::int64_t n, std::int64_t s) {
  DimConfig d;
  d.dims = {{"n", n}, {"s", s}};
  return d;
}

/// The truth-theoretic sentence diagram: sub obj ra verb over an n-dim noun
/// space and a 1-dim sentence space.
struct TruthSentence {
  Diagram diagram;
  std::map<std::string, Tensor> words;
};

TruthSentence truth_sentence(const std::vector<int>& sub_idx,
                             const std::vector<int>& obj_idx,
                             const TruthVerbSpec& spec, std::int64_t n) {
  std::vector<std::pair<std::string, PregroupType>> words = {
      {"sub", parse_type("n", grammar())},
      {"obj", parse_type("n", grammar())},
      {"ra", parse_type("n^r o", grammar())},
      {"verb", parse_type("o^r n^r s", grammar())},
  };
  std::vector<PregroupType> types;
  for (const auto& [text, type] : words) types.push_back(type);
  TruthSentence out{from_reduction(words, reduce(types, grammar())), {}};

  Tensor sub({n}), obj({n});
  for (int k : sub_idx) sub.at({k}) += 1.0;
  for (int l : obj_idx) obj.at({l}) += 1.0;
  out.words["sub"] = sub;
  out.words["obj"] = obj;
  out.words["ra"] = Tensor::delta(n);
  out.words["verb"] = truth_verb(spec, n);
  return out;
}

}  // namespace

TEST_CASE("eta and epsilon are the delta tensor") {
  Tensor e = eta(2);
  REQUIRE(e.shape() == std::vector<std::int64_t>{2, 2});
  CHECK(e.flat(0) == Complex(1.0));
  CHECK(e.flat(1) == Complex(0.0));
  CHECK(e.flat(2) == Complex(0.0));
  CHECK(e.flat(3) == Complex(1.0));

  // Symmetric under swapping its two legs.
  for (std::int64_t d = 1; d <= 5; ++d) {
    Tensor t = epsilon(d);
    CHECK(t.max_abs_diff(t.permuted({1, 0})) == 0.0);
  }
}

TEST_CASE("epsilon applied to eta gives the dimension") {
  // A cap feeding a cup is a closed circle: the scalar d.
  Diagram d;
  WireId a = d.fresh_wire("n");
  WireId b = d.fresh_wire("n");
  d.nodes.push_back(Node{NodeKind::Cap, "", {}, {a, b}});
  d.nodes.push_back(Node{NodeKind::Cup, "", {}, {a, b}});
  d.validate();
  Tensor r = evaluate(d, {}, dims_n(2, 1), grammar());
  CHECK(std::abs(r.scalar_value() - Complex(2.0)) < 1e-14);
}

TEST_CASE("a cup computes the dot product") {
  UniformRng rng(23);
  for (int trial = 0; trial < 10; ++trial) {
    Diagram d;
    WireId a = d.fresh_wire("n");
    WireId b = d.fresh_wire("n");
    d.nodes.push_back(Node{NodeKind::WordState, "v", parse_type("n", grammar()), {a}});
    d.nodes.push_back(Node{NodeKind::WordState, "w", parse_type("n", grammar()), {b}});
    d.nodes.push_back(Node{NodeKind::Cup, "", {}, {a, b}});
    std::map<std::string, Tensor> words{{"v", random_tensor({3}, rng, true)},
                                        {"w", random_tensor({3}, rng, true)}};
    Complex expected(0.0);
    for (std::int64_t i = 0; i < 3; ++i) {
      expected += words["v"].at({i}) * words["w"].at({i});
    }
    Tensor r = evaluate(d, words, dims_n(3, 1), grammar());
    CHECK(std::abs(r.scalar_value() - expected) < 1e-12);
  }
}

TEST_CASE("evaluate matches the paper's transitive contraction") {
  // sub (x) obj (x) ra (x) verb with ra = delta: sum_bc obj_b sub_c verb[b,c,k].
  const std::int64_t n = 3, s = 2;
  UniformRng rng(29);
  std::vector<std::pair<std::string, PregroupType>> words = {
      {"sub", parse_type("n", grammar())},
      {"obj", parse_type("n", grammar())},
      {"ra", parse_type("n^r o", grammar())},
      {"verb", parse_type("o^r n^r s", grammar())},
  };
  std::vector<PregroupType> types;
  for (const auto& [text, type] : words) types.push_back(type);
  Diagram d = from_reduction(words, reduce(types, grammar()));

  std::map<std::string, Tensor> lexicon{
      {"sub", random_tensor({n}, rng, true)},
      {"obj", random_tensor({n}, rng, true)},
      {"ra", Tensor::delta(n)},
      {"verb", random_tensor({n, n, s}, rng, true)},
  };
  Tensor got = evaluate(d, lexicon, dims_n(n, s), grammar());
  REQUIRE(got.shape() == std::vector<std::int64_t>{s});
  for (std::int64_t k = 0; k < s; ++k) {
    Complex expected(0.0);
    for (std::int64_t b = 0; b < n; ++b) {
      for (std::int64_t c = 0; c < n; ++c) {
        expected += lexicon["obj"].at({b}) * lexicon["sub"].at({c}) *
                    lexicon["verb"].at({b, c, k});
      }
    }
    CHECK(std::abs(got.at({k}) - expected) < 1e-12);
  }
}

TEST_CASE("evaluate of a single word returns its tensor") {
  Diagram d;
  WireId a = d.fresh_wire("n");
  d.nodes.push_back(Node{NodeKind::WordState, "v", parse_type("n", grammar()), {a}});
  d.outputs = {a};
  UniformRng rng(31);
  std::map<std::string, Tensor> words{{"v", random_tensor({4}, rng, true)}};
  Tensor r = evaluate(d, words, dims_n(4, 1), grammar());
  CHECK(r.max_abs_diff(words["v"]) == 0.0);
}

TEST_CASE("evaluate agrees with the exhaustive-summation oracle") {
  Lexicon lexicon = Lexicon::builtin();
  UniformRng rng(37);
  for (const char* sentence : {kPersian, kEnglish}) {
    Diagram d = sentence_diagram(lexicon, sentence);
    for (int trial = 0; trial < 5; ++trial) {
      auto words = random_word_tensors(lexicon, d, rng);
      Tensor engine = evaluate(d, words, qubit_dims(lexicon), lexicon.grammar);
      Tensor oracle = brute_force_evaluate(d, words, qubit_dims(lexicon),
                                           lexicon.grammar);
      CHECK(engine.max_abs_diff(oracle) < 1e-12);
    }
  }
}

TEST_CASE("the compact-closed identity holds for dims 1 to 5") {
  for (std::int64_t n = 1; n <= 5; ++n) {
    for (std::int64_t k = 0; k < n; ++k) {
      // probe e_k --- cup --- cap --- output: must reproduce e_k.
      Diagram d;
      WireId a = d.fresh_wire("n");
      WireId b = d.fresh_wire("n");
      WireId c = d.fresh_wire("n");
      d.nodes.push_back(
          Node{NodeKind::WordState, "p", parse_type("n", grammar()), {a}});
      d.nodes.push_back(Node{NodeKind::Cup, "", {}, {a, b}});
      d.nodes.push_back(Node{NodeKind::Cap, "", {}, {b, c}});
      d.outputs = {c};
      Tensor probe({n});
      probe.at({k}) = 1.0;
      Tensor r = evaluate(d, {{"p", probe}}, dims_n(n, 1), grammar());
      CHECK(r.max_abs_diff(probe) < 1e-12);
    }
  }
}

TEST_CASE("evaluate is multilinear in each word tensor") {
  Lexicon lexicon = Lexicon::builtin();
  Diagram d = sentence_diagram(lexicon, kPersian);
  UniformRng rng(41);
  auto words = random_word_tensors(lexicon, d, rng);
  Tensor base = evaluate(d, words, qubit_dims(lexicon), lexicon.grammar);
  const Complex lambda(0.7, -1.3);
  auto scaled_words = words;
  scaled_words["ketab"] *= lambda;
  Tensor scaled = evaluate(d, scaled_words, qubit_dims(lexicon), lexicon.grammar);
  Tensor expected = base;
  expected *= lambda;
  CHECK(scaled.max_abs_diff(expected) < 1e-12);
}

TEST_CASE("truth_verb lays alpha out as [object][subject][0]") {
  TruthVerbSpec one{Eigen::MatrixXd::Ones(1, 1)};
  CHECK(truth_verb(one, 1).at({0, 0, 0}) == Complex(1.0));

  Eigen::MatrixXd alpha(2, 2);
  alpha << 0.1, 0.2, 0.3, 0.4;
  Tensor t = truth_verb(TruthVerbSpec{alpha}, 2);
  for (std::int64_t j = 0; j < 2; ++j) {
    for (std::int64_t i = 0; i < 2; ++i) {
      CHECK(t.at({j, i, 0}) == Complex(alpha(j, i)));
    }
  }

  TruthVerbSpec zeros{Eigen::MatrixXd::Zero(3, 3)};
  CHECK(truth_verb(zeros, 3).norm() == 0.0);
}

TEST_CASE("truth-theoretic sentences have the closed-form meaning") {
  TruthVerbSpec one{Eigen::MatrixXd::Ones(1, 1)};
  CHECK(truth_sentence_meaning({0}, {0}, one) == doctest::Approx(1.0));

  TruthVerbSpec eye{Eigen::MatrixXd::Identity(2, 2)};
  CHECK(truth_sentence_meaning({0, 1}, {0, 1}, eye) == doctest::Approx(2.0));

  CHECK_THROWS_AS(truth_sentence_meaning({5}, {0}, one), TensorError);

  // Random alphas and subsets against the diagram evaluation.
  UniformRng rng(43);
  for (int trial = 0; trial < 20; ++trial) {
    std::int64_t n = 2 + static_cast<std::int64_t>(rng.next_raw() % 3);
    Eigen::MatrixXd alpha(n, n);
    for (std::int64_t j = 0; j < n; ++j) {
      for (std::int64_t i = 0; i < n; ++i) alpha(j, i) = rng.next_unit();
    }
    TruthVerbSpec spec{alpha};
    std::vector<int> sub_idx, obj_idx;
    for (int k = 0; k < n; ++k) {
      if (rng.next_raw() % 2) sub_idx.push_back(k);
      if (rng.next_raw() % 2) obj_idx.push_back(k);
    }
    if (sub_idx.empty()) sub_idx.push_back(0);
    if (obj_idx.empty()) obj_idx.push_back(0);

    TruthSentence ts = truth_sentence(sub_idx, obj_idx, spec, n);
    DimConfig dims = dims_n(n, 1);
    Tensor meaning = evaluate(ts.diagram, ts.words, dims, grammar());
    double closed = truth_sentence_meaning(sub_idx, obj_idx, spec);
    CHECK(std::abs(meaning.at({0}) - Complex(closed)) < 1e-12);
  }
}

TEST_CASE("verb_from_corpus sums outer products") {
  WordVector e0 = WordVector::Zero(2), e1 = WordVector::Zero(2);
  e0(0) = 1.0;
  e1(1) = 1.0;
  Tensor single = verb_from_corpus({{e0, e1}});
  CHECK(single.at({0, 0}) == Complex(0.0));
  CHECK(single.at({0, 1}) == Complex(1.0));
  CHECK(single.at({1, 0}) == Complex(0.0));
  CHECK(single.at({1, 1}) == Complex(0.0));

  Tensor twice = verb_from_corpus({{e0, e1}, {e0, e1}});
  Tensor doubled = single;
  doubled *= 2.0;
  CHECK(twice.max_abs_diff(doubled) == 0.0);

  UniformRng rng(47);
  std::vector<std::pair<WordVector, WordVector>> corpus;
  for (int p = 0; p < 5; ++p) {
    WordVector obj(4), sub(4);
    for (int i = 0; i < 4; ++i) {
      obj(i) = 2.0 * rng.next_unit() - 1.0;
      sub(i) = 2.0 * rng.next_unit() - 1.0;
    }
    corpus.emplace_back(obj, sub);
  }
  Tensor got = verb_from_corpus(corpus);
  for (std::int64_t j = 0; j < 4; ++j) {
    for (std::int64_t i = 0; i < 4; ++i) {
      double expected = 0.0;
      for (const auto& [obj, sub] : corpus) expected += obj(j) * sub(i);
      CHECK(std::abs(got.at({j, i}) - Complex(expected)) < 1e-12);
    }
  }
}

TEST_CASE("pointwise_meaning multiplies elementwise") {
  WordVector obj(2), sub(2);
  obj << 1.0, 0.0;
  sub << 0.0, 1.0;
  Tensor verb({2, 2});
  verb.at({0, 0}) = 1.5;
  verb.at({0, 1}) = 2.5;
  verb.at({1, 0}) = 3.5;
  verb.at({1, 1}) = 4.5;
  Tensor got = pointwise_meaning(obj, sub, verb);
  CHECK(got.at({0, 0}) == Complex(0.0));
  CHECK(got.at({0, 1}) == Complex(2.5));
  CHECK(got.at({1, 0}) == Complex(0.0));
  CHECK(got.at({1, 1}) == Complex(0.0));

  // All-ones verb: the plain outer product.
  Tensor ones({2, 2});
  for (std::int64_t i = 0; i < 4; ++i) ones.flat(i) = 1.0;
  Tensor outer = pointwise_meaning(obj, sub, ones);
  for (std::int64_t j = 0; j < 2; ++j) {
    for (std::int64_t i = 0; i < 2; ++i) {
      CHECK(outer.at({j, i}) == Complex(obj(j) * sub(i)));
    }
  }
}

TEST_CASE("shape mismatches are reported") {
  // Word tensor of the wrong shape.
  Diagram d;
  WireId a = d.fresh_wire("n");
  d.nodes.push_back(Node{NodeKind::WordState, "v", parse_type("n", grammar()), {a}});
  d.outputs = {a};
  CHECK_THROWS_AS(evaluate(d, {{"v", Tensor({3})}}, dims_n(2, 1), grammar()),
                  TensorError);
  CHECK_THROWS_AS(evaluate(d, {{"v", Tensor({2, 2})}}, dims_n(2, 1), grammar()),
                  TensorError);
  CHECK_THROWS_AS(evaluate(d, {}, dims_n(2, 1), grammar()), TensorError);

  // Alpha matrix inconsistent with the noun dimension.
  CHECK_THROWS_AS(truth_verb(TruthVerbSpec{Eigen::MatrixXd::Zero(2, 2)}, 3),
                  TensorError);

  // Corpus pairs of different lengths.
  WordVector v2(2), v3(3);
  v2.setOnes();
  v3.setOnes();
  CHECK_THROWS_AS(verb_from_corpus({{v2, v2}, {v3, v2}}), TensorError);

  // Verb matrix not matching the vectors.
  CHECK_THROWS_AS(pointwise_meaning(v2, v3, Tensor({2, 2})), TensorError);
}

TEST_CASE("pointwise_meaning equals the contraction formula") {
  UniformRng rng(53);
  for (int trial = 0; trial < 200; ++trial) {
    std::int64_t n = 2 + static_cast<std::int64_t>(rng.next_raw() % 3);
    WordVector obj(n), sub(n);
    for (std::int64_t i = 0; i < n; ++i) {
      obj(i) = 2.0 * rng.next_unit() - 1.0;
      sub(i) = 2.0 * rng.next_unit() - 1.0;
    }
    Tensor verb = random_tensor({n, n}, rng, false);
    Tensor got = pointwise_meaning(obj, sub, verb);
    // sum_ji <obj|n_j><sub|n_i> c_ji (n_j (x) n_i), by explicit loops.
    for (std::int64_t j = 0; j < n; ++j) {
      for (std::int64_t i = 0; i < n; ++i) {
        Complex expected = obj(j) * sub(i) * verb.at({j, i});
        CHECK(std::abs(got.at({j, i}) - expected) < 1e-12);
      }
    }
  }
}
