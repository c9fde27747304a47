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

#include "discoqc/parameters.hpp"
#include "discoqc/pregroup.hpp"

using namespace discoqc;

namespace {

GrammarConfig grammar() { return GrammarConfig::standard(); }

std::vector<PregroupType> types_of(const std::vector<std::string>& texts) {
  std::vector<PregroupType> out;
  for (const auto& t : texts) out.push_back(parse_type(t, grammar()));
  return out;
}

}  // namespace

TEST_CASE("parse_type reads adjoint-decorated types") {
  PregroupType t = parse_type("o^r n^r s", grammar());
  REQUIRE(t.size() == 3);
  CHECK(t.simples[0] == SimpleType{"o", 1});
  CHECK(t.simples[1] == SimpleType{"n", 1});
  CHECK(t.simples[2] == SimpleType{"s", 0});

  CHECK(parse_type("", grammar()).is_unit());

  PregroupType tv = parse_type("n^r s n^l", grammar());
  CHECK(tv.simples == std::vector<SimpleType>{{"n", 1}, {"s", 0}, {"n", -1}});

  CHECK(parse_type("n^rr", grammar()).simples[0].z == 2);
  CHECK(parse_type("n^ll", grammar()).simples[0].z == -2);
}

TEST_CASE("parse_type rejects malformed input") {
  CHECK_THROWS_AS(parse_type("x", grammar()), GrammarError);
  CHECK_THROWS_AS(parse_type("n^", grammar()), GrammarError);
  CHECK_THROWS_AS(parse_type("n^rl", grammar()), GrammarError);
  CHECK_THROWS_AS(parse_type("n^q", grammar()), GrammarError);
  CHECK_THROWS_AS(parse_type("^r", grammar()), GrammarError);
}

TEST_CASE("types round-trip through the formatter") {
  for (const char* text : {"", "n", "o^r n^r s", "n^r s n^l", "n^rr o^ll s"}) {
    PregroupType t = parse_type(text, grammar());
    CHECK(parse_type(format_type(t), grammar()) == t);
  }
}

TEST_CASE("adjoints are involutive") {
  UniformRng rng(7);
  for (int i = 0; i < 1000; ++i) {
    std::string base = (i % 3 == 0) ? "n" : (i % 3 == 1) ? "s" : "o";
    int z = static_cast<int>(rng.next_raw() % 9) - 4;
    SimpleType t{base, z};
    CHECK(adjoint_left(adjoint_right(t)) == t);
    CHECK(adjoint_right(adjoint_left(t)) == t);
  }
}

TEST_CASE("the Persian transitive sentence reduces to s") {
  auto linkage = reduce(types_of({"n", "n", "n^r o", "o^r n^r s"}), grammar());
  CHECK(linkage.grammatical);
  CHECK(linkage.cups ==
        std::vector<std::pair<int, int>>{{0, 5}, {1, 2}, {3, 4}});
  REQUIRE(linkage.survivors.size() == 1);
  CHECK(linkage.survivors[0] == 6);
  CHECK(linkage.flat[6] == SimpleType{"s", 0});
}

TEST_CASE("the English transitive sentence reduces to s") {
  auto linkage = reduce(types_of({"n", "n^r s n^l", "n n^l", "n"}), grammar());
  CHECK(linkage.grammatical);
  CHECK(linkage.cups ==
        std::vector<std::pair<int, int>>{{0, 1}, {3, 4}, {5, 6}});
  REQUIRE(linkage.survivors.size() == 1);
  CHECK(linkage.survivors[0] == 2);
}

TEST_CASE("degenerate reductions") {
  auto lone = reduce(types_of({"s"}), grammar());
  CHECK(lone.grammatical);
  CHECK(lone.cups.empty());
  CHECK(lone.survivors == std::vector<int>{0});

  auto two_nouns = reduce(types_of({"n", "n"}), grammar());
  CHECK_FALSE(two_nouns.grammatical);
  CHECK(two_nouns.cups.empty());
  CHECK(two_nouns.survivors == std::vector<int>{0, 1});
}

TEST_CASE("is_grammatical wraps reduce") {
  CHECK(is_grammatical(types_of({"n", "n", "n^r o", "o^r n^r s"}), grammar()));
  CHECK_FALSE(is_grammatical(types_of({"n", "n"}), grammar()));
  CHECK(is_grammatical(types_of({"n", "n^r s"}), grammar()));
}

namespace {

/// Random word types over n/s/o with small adjoints.
std::vector<PregroupType> random_types(UniformRng& rng) {
  int words = 1 + static_cast<int>(rng.next_raw() % 4);
  std::vector<PregroupType> out;
  for (int w = 0; w < words; ++w) {
    PregroupType t;
    int simples = static_cast<int>(rng.next_raw() % 4);
    for (int k = 0; k < simples; ++k) {
      std::string base = (rng.next_raw() % 2) ? "n" : "s";
      int z = static_cast<int>(rng.next_raw() % 3) - 1;
      t.simples.push_back({base, z});
    }
    out.push_back(std::move(t));
  }
  return out;
}

}  // namespace

TEST_CASE("linkage accounting and planarity hold on random inputs") {
  UniformRng rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    auto types = random_types(rng);
    auto linkage = reduce(types, grammar());
    CHECK(linkage.cups.size() * 2 + linkage.survivors.size() == linkage.total());
    for (const auto& [i, j] : linkage.cups) {
      CHECK(i < j);
      const auto& a = linkage.flat[i];
      const auto& b = linkage.flat[j];
      CHECK(grammar().same_base(a.base, b.base));
      CHECK(b.z == a.z + 1);
      for (const auto& [k, l] : linkage.cups) {
        bool crossing = i < k && k < j && j < l;
        CHECK_FALSE(crossing);
      }
    }
  }
}

TEST_CASE("reduce is invariant under re-bracketing of word boundaries") {
  UniformRng rng(13);
  for (int trial = 0; trial < 200; ++trial) {
    auto types = random_types(rng);
    auto base_linkage = reduce(types, grammar());

    // Same simple types, all in one word.
    PregroupType flat;
    for (const auto& t : types) {
      flat.simples.insert(flat.simples.end(), t.simples.begin(), t.simples.end());
    }
    auto flat_linkage = reduce({flat}, grammar());
    CHECK(base_linkage.cups == flat_linkage.cups);
    CHECK(base_linkage.survivors == flat_linkage.survivors);
  }
}
