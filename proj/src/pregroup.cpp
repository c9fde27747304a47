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

#include "discoqc/pregroup.hpp"

#include <algorithm>
#include <sstream>

namespace discoqc {

SimpleType adjoint_left(const SimpleType& t) { return {t.base, t.z - 1}; }
SimpleType adjoint_right(const SimpleType& t) { return {t.base, t.z + 1}; }

bool GrammarConfig::is_known(const std::string& base) const {
  return std::find(basic_types.begin(), basic_types.end(), base) !=
         basic_types.end();
}

std::string GrammarConfig::resolve(const std::string& base) const {
  auto it = aliases.find(base);
  return it == aliases.end() ? base : it->second;
}

bool GrammarConfig::same_base(const std::string& a, const std::string& b) const {
  return resolve(a) == resolve(b);
}

GrammarConfig GrammarConfig::standard() {
  GrammarConfig g;
  g.basic_types = {"n", "s", "o"};
  g.target = "s";
  g.aliases = {{"o", "n"}};
  return g;
}

namespace {

SimpleType parse_token(const std::string& token, const GrammarConfig& grammar) {
  auto caret = token.find('^');
  std::string base = token.substr(0, caret);
  if (base.empty() || !grammar.is_known(base)) {
    throw GrammarError("unknown basic type '" + base + "' in '" + token + "'");
  }
  int z = 0;
  if (caret != std::string::npos) {
    std::string suffix = token.substr(caret + 1);
    if (suffix.empty()) {
      throw GrammarError("empty adjoint suffix in '" + token + "'");
    }
    char kind = suffix[0];
    if ((kind != 'l' && kind != 'r') ||
        suffix.find_first_not_of(kind) != std::string::npos) {
      throw GrammarError("malformed adjoint suffix in '" + token + "'");
    }
    z = static_cast<int>(suffix.size());
    if (kind == 'l') z = -z;
  }
  return {base, z};
}

}  // namespace

PregroupType parse_type(const std::string& text, const GrammarConfig& grammar) {
  PregroupType result;
  std::istringstream in(text);
  std::string token;
  while (in >> token) {
    result.simples.push_back(parse_token(token, grammar));
  }
  return result;
}

std::string format_type(const SimpleType& t) {
  std::string out = t.base;
  if (t.z != 0) {
    out += '^';
    out += std::string(static_cast<std::size_t>(std::abs(t.z)),
                       t.z < 0 ? 'l' : 'r');
  }
  return out;
}

std::string format_type(const PregroupType& t) {
  std::string out;
  for (std::size_t i = 0; i < t.simples.size(); ++i) {
    if (i > 0) out += ' ';
    out += format_type(t.simples[i]);
  }
  return out;
}

ReductionLinkage reduce(const std::vector<PregroupType>& types,
                        const GrammarConfig& grammar) {
  ReductionLinkage linkage;
  for (const auto& t : types) {
    linkage.flat.insert(linkage.flat.end(), t.simples.begin(),
                        t.simples.end());
  }

  // Active indices, shrinking as pairs get linked. Always take the leftmost
  // adjacent reducible pair first; adjacency is within the active sequence.
  std::vector<int> active(linkage.flat.size());
  for (std::size_t i = 0; i < active.size(); ++i) active[i] = static_cast<int>(i);

  bool linked = true;
  while (linked) {
    linked = false;
    for (std::size_t k = 0; k + 1 < active.size(); ++k) {
      const SimpleType& a = linkage.flat[active[k]];
      const SimpleType& b = linkage.flat[active[k + 1]];
      if (grammar.same_base(a.base, b.base) && b.z == a.z + 1) {
        linkage.cups.emplace_back(active[k], active[k + 1]);
        active.erase(active.begin() + k, active.begin() + k + 2);
        linked = true;
        break;
      }
    }
  }

  linkage.survivors = active;
  std::sort(linkage.cups.begin(), linkage.cups.end());
  linkage.grammatical =
      linkage.survivors.size() == 1 &&
      linkage.flat[linkage.survivors[0]].z == 0 &&
      grammar.same_base(linkage.flat[linkage.survivors[0]].base, grammar.target);
  return linkage;
}

bool is_grammatical(const std::vector<PregroupType>& types,
                    const GrammarConfig& grammar) {
  return reduce(types, grammar).grammatical;
}

}  // namespace discoqc
