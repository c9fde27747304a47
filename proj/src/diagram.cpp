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

#include "discoqc/diagram.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

namespace discoqc {

WireId Diagram::fresh_wire(const std::string& base) {
  WireId id = wire_base.empty() ? 0 : wire_base.rbegin()->first + 1;
  wire_base[id] = base;
  return id;
}

void Diagram::validate() const {
  std::map<WireId, int> endpoints;
  for (const auto& node : nodes) {
    for (WireId w : node.ports) endpoints[w]++;
  }
  for (WireId w : outputs) endpoints[w]++;
  for (const auto& [w, base] : wire_base) {
    auto it = endpoints.find(w);
    int count = it == endpoints.end() ? 0 : it->second;
    if (count != 2) {
      throw DiagramError("wire " + std::to_string(w) + " has " +
                         std::to_string(count) + " endpoints, expected 2");
    }
    endpoints.erase(w);
  }
  if (!endpoints.empty()) {
    throw DiagramError("port references an unregistered wire " +
                       std::to_string(endpoints.begin()->first));
  }
}

std::vector<std::size_t> Diagram::word_node_indices() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (nodes[i].kind == NodeKind::WordState ||
        nodes[i].kind == NodeKind::WordEffect) {
      out.push_back(i);
    }
  }
  return out;
}

Diagram from_reduction(
    const std::vector<std::pair<std::string, PregroupType>>& words,
    const ReductionLinkage& linkage) {
  Diagram d;
  for (std::size_t i = 0; i < linkage.flat.size(); ++i) {
    d.wire_base[static_cast<WireId>(i)] = linkage.flat[i].base;
  }
  int offset = 0;
  for (const auto& [text, type] : words) {
    Node node{NodeKind::WordState, text, type, {}};
    for (std::size_t k = 0; k < type.simples.size(); ++k) {
      node.ports.push_back(offset + static_cast<int>(k));
    }
    offset += static_cast<int>(type.simples.size());
    d.nodes.push_back(std::move(node));
  }
  if (offset != static_cast<int>(linkage.flat.size())) {
    throw DiagramError("linkage does not match the given word types");
  }
  for (const auto& [i, j] : linkage.cups) {
    if (i < 0 || j < 0 || i >= offset || j >= offset) {
      throw DiagramError("linkage index out of range");
    }
    d.nodes.push_back(Node{NodeKind::Cup, "", {}, {i, j}});
  }
  for (int s : linkage.survivors) {
    if (s < 0 || s >= offset) throw DiagramError("survivor index out of range");
    d.outputs.push_back(s);
  }
  d.validate();
  return d;
}

Diagram substitute_cap_words(const Diagram& d,
                             const std::set<std::string>& cap_words,
                             const GrammarConfig& grammar) {
  Diagram out = d;
  for (auto& node : out.nodes) {
    if (node.kind != NodeKind::WordState || !cap_words.count(node.word)) {
      continue;
    }
    const auto& simples = node.type.simples;
    if (simples.size() != 2 ||
        !grammar.same_base(simples[0].base, simples[1].base)) {
      throw DiagramError("word '" + node.word +
                         "' has type incompatible with a cap: " +
                         format_type(node.type));
    }
    node.kind = NodeKind::Cap;
  }
  return out;
}

namespace {

void replace_wire(Diagram& d, WireId from, WireId to) {
  for (auto& node : d.nodes) {
    for (auto& w : node.ports) {
      if (w == from) w = to;
    }
  }
  for (auto& w : d.outputs) {
    if (w == from) w = to;
  }
  d.wire_base.erase(from);
}

}  // namespace

Diagram snake_removal(const Diagram& d) {
  Diagram out = d;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t ci = 0; ci < out.nodes.size() && !changed; ++ci) {
      if (out.nodes[ci].kind != NodeKind::Cup) continue;
      for (std::size_t ki = 0; ki < out.nodes.size() && !changed; ++ki) {
        if (out.nodes[ki].kind != NodeKind::Cap) continue;
        const auto& cup = out.nodes[ci].ports;
        const auto& cap = out.nodes[ki].ports;
        // Exactly one shared wire makes a snake; two make a closed loop,
        // which is a scalar and stays in place.
        std::vector<WireId> shared;
        for (WireId w : cup) {
          if (w == cap[0] || w == cap[1]) shared.push_back(w);
        }
        if (shared.size() != 1) continue;
        WireId mid = shared[0];
        WireId cup_free = cup[0] == mid ? cup[1] : cup[0];
        WireId cap_free = cap[0] == mid ? cap[1] : cap[0];
        out.nodes.erase(out.nodes.begin() + std::max(ci, ki));
        out.nodes.erase(out.nodes.begin() + std::min(ci, ki));
        out.wire_base.erase(mid);
        replace_wire(out, cap_free, cup_free);
        changed = true;
      }
    }
  }
  out.validate();
  return out;
}

namespace {

struct WireClasses {
  std::map<WireId, WireId> parent;

  WireId find(WireId w) {
    auto it = parent.find(w);
    if (it == parent.end() || it->second == w) return w;
    return it->second = find(it->second);
  }
  void unite(WireId a, WireId b) { parent[find(a)] = find(b); }
};

std::size_t root_word_index(const Diagram& d, const GrammarConfig& grammar) {
  std::vector<std::size_t> roots;
  for (std::size_t i : d.word_node_indices()) {
    for (const auto& st : d.nodes[i].type.simples) {
      if (st.z == 0 && grammar.same_base(st.base, grammar.target)) {
        roots.push_back(i);
        break;
      }
    }
  }
  if (roots.size() != 1) {
    throw DiagramError("expected exactly one root word, found " +
                       std::to_string(roots.size()));
  }
  return roots[0];
}

/// BFS distances over the word-adjacency graph, keyed by word node index.
std::map<std::size_t, int> word_distances(const Diagram& d,
                                          const GrammarConfig& grammar) {
  auto words = d.word_node_indices();
  std::size_t root = root_word_index(d, grammar);

  // Chains of cups/caps (and swaps) merge wires into one class; two words
  // sharing a class are adjacent.
  WireClasses classes;
  for (const auto& node : d.nodes) {
    if (node.kind == NodeKind::Cup || node.kind == NodeKind::Cap) {
      classes.unite(node.ports[0], node.ports[1]);
    } else if (node.kind == NodeKind::Swap) {
      classes.unite(node.ports[0], node.ports[3]);
      classes.unite(node.ports[1], node.ports[2]);
    }
  }
  std::map<WireId, std::vector<std::size_t>> members;
  for (std::size_t i : words) {
    for (WireId w : d.nodes[i].ports) {
      members[classes.find(w)].push_back(i);
    }
  }

  std::map<std::size_t, int> dist;
  dist[root] = 0;
  std::deque<std::size_t> queue{root};
  while (!queue.empty()) {
    std::size_t at = queue.front();
    queue.pop_front();
    for (WireId w : d.nodes[at].ports) {
      for (std::size_t other : members[classes.find(w)]) {
        if (other != at && !dist.count(other)) {
          dist[other] = dist[at] + 1;
          queue.push_back(other);
        }
      }
    }
  }
  for (std::size_t i : words) {
    if (!dist.count(i)) {
      throw DiagramError("word '" + d.nodes[i].word +
                         "' is disconnected from the root");
    }
  }
  return dist;
}

}  // namespace

std::map<std::string, int> distance_from_root(const Diagram& d,
                                              const GrammarConfig& grammar) {
  std::map<std::string, int> out;
  for (const auto& [idx, dist] : word_distances(d, grammar)) {
    out[d.nodes[idx].word] = dist;
  }
  return out;
}

Diagram bigraph_rewrite(const Diagram& d, const GrammarConfig& grammar) {
  Diagram work = snake_removal(d);
  auto dist = word_distances(work, grammar);

  for (const auto& [idx, dv] : dist) {
    if (dv % 2 == 1) work.nodes[idx].kind = NodeKind::WordEffect;
  }

  // Cups (and any remaining caps) now sit between a state port and an effect
  // port; collapse each into one identity wire from the state down.
  WireClasses classes;
  for (const auto& node : work.nodes) {
    if (node.kind == NodeKind::Cup || node.kind == NodeKind::Cap) {
      classes.unite(node.ports[0], node.ports[1]);
    }
  }
  Diagram out;
  out.outputs = work.outputs;
  std::map<WireId, WireId> canon;  // class representative -> kept wire id
  auto keep = [&](WireId w) {
    WireId rep = classes.find(w);
    auto it = canon.find(rep);
    if (it != canon.end()) return it->second;
    canon[rep] = w;
    return w;
  };
  for (const auto& node : work.nodes) {
    if (node.kind == NodeKind::Cup || node.kind == NodeKind::Cap) continue;
    Node copy = node;
    for (auto& w : copy.ports) w = keep(w);
    out.nodes.push_back(std::move(copy));
  }
  for (auto& w : out.outputs) w = keep(w);
  for (const auto& node : out.nodes) {
    for (WireId w : node.ports) out.wire_base[w] = work.wire_base.at(w);
  }
  for (WireId w : out.outputs) out.wire_base[w] = work.wire_base.at(w);
  out.validate();

  // Planarize: read the top boundary off the states, the bottom boundary off
  // the effects then the outputs, and bubble-sort the permutation with Swap
  // nodes.
  std::vector<WireId> top;
  for (const auto& node : out.nodes) {
    if (node.kind == NodeKind::WordState) {
      top.insert(top.end(), node.ports.begin(), node.ports.end());
    }
  }
  std::vector<WireId> bottom;
  for (const auto& node : out.nodes) {
    if (node.kind == NodeKind::WordEffect) {
      bottom.insert(bottom.end(), node.ports.begin(), node.ports.end());
    }
  }
  bottom.insert(bottom.end(), out.outputs.begin(), out.outputs.end());
  if (top.size() != bottom.size()) {
    throw DiagramError("bigraph wiring is not bipartite");
  }
  std::vector<int> dest(top.size());
  for (std::size_t i = 0; i < top.size(); ++i) {
    auto it = std::find(bottom.begin(), bottom.end(), top[i]);
    if (it == bottom.end()) {
      throw DiagramError("state wire does not reach the bottom boundary");
    }
    dest[i] = static_cast<int>(it - bottom.begin());
  }

  // Each adjacent inversion becomes one Swap node; the lower halves of the
  // crossing wires get fresh ids and the downstream consumers are rewired.
  auto rewire_below = [&](WireId from, WireId to) {
    for (auto& node : out.nodes) {
      if (node.kind != NodeKind::WordEffect) continue;
      for (auto& w : node.ports) {
        if (w == from) w = to;
      }
    }
    for (auto& w : out.outputs) {
      if (w == from) w = to;
    }
  };
  bool sorted = false;
  while (!sorted) {
    sorted = true;
    for (std::size_t i = 0; i + 1 < top.size(); ++i) {
      if (dest[i] <= dest[i + 1]) continue;
      WireId u = top[i], v = top[i + 1];
      WireId v_out = out.fresh_wire(out.wire_base.at(v));
      WireId u_out = out.fresh_wire(out.wire_base.at(u));
      rewire_below(v, v_out);
      rewire_below(u, u_out);
      out.nodes.push_back(Node{NodeKind::Swap, "", {}, {u, v, v_out, u_out}});
      top[i] = v_out;
      top[i + 1] = u_out;
      std::swap(dest[i], dest[i + 1]);
      sorted = false;
      break;
    }
  }
  out.validate();
  return out;
}

bool is_bipartite_normal(const Diagram& d) {
  for (const auto& node : d.nodes) {
    if (node.kind == NodeKind::Cup || node.kind == NodeKind::Cap) return false;
  }
  return true;
}

Diagram canonical_renumber(const Diagram& d) {
  std::map<WireId, WireId> remap;
  auto touch = [&](WireId w) {
    if (!remap.count(w)) {
      WireId next = static_cast<WireId>(remap.size());
      remap[w] = next;
    }
  };
  for (const auto& node : d.nodes) {
    for (WireId w : node.ports) touch(w);
  }
  for (WireId w : d.outputs) touch(w);
  Diagram out = d;
  out.wire_base.clear();
  for (auto& node : out.nodes) {
    for (auto& w : node.ports) w = remap.at(w);
  }
  for (auto& w : out.outputs) w = remap.at(w);
  for (const auto& [w, base] : d.wire_base) out.wire_base[remap.at(w)] = base;
  return out;
}

bool diagram_equal(const Diagram& a, const Diagram& b) {
  Diagram ca = canonical_renumber(a);
  Diagram cb = canonical_renumber(b);
  if (ca.outputs != cb.outputs || ca.wire_base != cb.wire_base ||
      ca.nodes.size() != cb.nodes.size()) {
    return false;
  }
  for (std::size_t i = 0; i < ca.nodes.size(); ++i) {
    const Node& na = ca.nodes[i];
    const Node& nb = cb.nodes[i];
    if (na.kind != nb.kind || na.word != nb.word || na.type != nb.type ||
        na.ports != nb.ports) {
      return false;
    }
  }
  return true;
}

std::string to_dot(const Diagram& d) {
  std::ostringstream out;
  out << "digraph diagram {\n  rankdir=TB;\n";
  std::vector<std::string> states, effects;
  for (std::size_t i = 0; i < d.nodes.size(); ++i) {
    const Node& node = d.nodes[i];
    std::string id = "n" + std::to_string(i);
    std::string label;
    std::string shape = "box";
    switch (node.kind) {
      case NodeKind::WordState:
        label = node.word + " : " + format_type(node.type);
        states.push_back(id);
        break;
      case NodeKind::WordEffect:
        label = node.word + "^T : " + format_type(node.type);
        shape = "invtrapezium";
        effects.push_back(id);
        break;
      case NodeKind::Cup:
        label = "cup";
        shape = "ellipse";
        break;
      case NodeKind::Cap:
        label = "cap";
        shape = "ellipse";
        break;
      case NodeKind::Swap:
        label = "swap";
        shape = "diamond";
        break;
    }
    out << "  " << id << " [label=\"" << label << "\", shape=" << shape
        << "];\n";
  }
  // One edge per wire between its two endpoints.
  std::map<WireId, std::vector<std::string>> ends;
  for (std::size_t i = 0; i < d.nodes.size(); ++i) {
    for (WireId w : d.nodes[i].ports) {
      ends[w].push_back("n" + std::to_string(i));
    }
  }
  for (std::size_t k = 0; k < d.outputs.size(); ++k) {
    std::string id = "out" + std::to_string(k);
    out << "  " << id << " [label=\"out " << k << "\", shape=plaintext];\n";
    ends[d.outputs[k]].push_back(id);
  }
  for (const auto& [w, endpoints] : ends) {
    if (endpoints.size() == 2) {
      out << "  " << endpoints[0] << " -> " << endpoints[1] << " [label=\""
          << d.wire_base.at(w) << "\"];\n";
    }
  }
  if (!states.empty()) {
    out << "  { rank=source;";
    for (const auto& s : states) out << ' ' << s << ';';
    out << " }\n";
  }
  if (!effects.empty()) {
    out << "  { rank=sink;";
    for (const auto& e : effects) out << ' ' << e << ';';
    out << " }\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace discoqc
