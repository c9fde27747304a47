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

#include "discoqc/json_io.hpp"

#include <cstdio>
#include <fstream>

#include <json.hpp>

namespace discoqc {

std::string format_double(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.17g", value);
  return buffer;
}

std::string escape_json(const std::string& s) {
  std::string out;
  out.reserve(s.size() + 2);
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      case '\r': out += "\\r"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof(buf), "\\u%04x", c);
          out += buf;
        } else {
          out += c;
        }
    }
  }
  return out;
}

void JsonWriter::separate() {
  if (counts_.empty()) return;
  if (pending_key_) {
    pending_key_ = false;
    return;
  }
  if (counts_.back() > 0) out_ << ',';
  out_ << '\n';
  indent();
  counts_.back()++;
}

void JsonWriter::indent() {
  for (std::size_t i = 0; i < counts_.size(); ++i) out_ << "  ";
}

JsonWriter& JsonWriter::begin_object() {
  separate();
  out_ << '{';
  counts_.push_back(0);
  return *this;
}

JsonWriter& JsonWriter::end_object() {
  int n = counts_.back();
  counts_.pop_back();
  if (n > 0) {
    out_ << '\n';
    indent();
  }
  out_ << '}';
  return *this;
}

JsonWriter& JsonWriter::begin_array() {
  separate();
  out_ << '[';
  counts_.push_back(0);
  return *this;
}

JsonWriter& JsonWriter::end_array() {
  int n = counts_.back();
  counts_.pop_back();
  if (n > 0) {
    out_ << '\n';
    indent();
  }
  out_ << ']';
  return *this;
}

JsonWriter& JsonWriter::key(const std::string& name) {
  separate();
  out_ << '"' << escape_json(name) << "\": ";
  pending_key_ = true;
  return *this;
}

JsonWriter& JsonWriter::value(double v) {
  separate();
  out_ << format_double(v);
  return *this;
}

JsonWriter& JsonWriter::value(int v) {
  separate();
  out_ << v;
  return *this;
}

JsonWriter& JsonWriter::value(std::int64_t v) {
  separate();
  out_ << v;
  return *this;
}

JsonWriter& JsonWriter::value(bool v) {
  separate();
  out_ << (v ? "true" : "false");
  return *this;
}

JsonWriter& JsonWriter::value(const std::string& v) {
  separate();
  out_ << '"' << escape_json(v) << '"';
  return *this;
}

JsonWriter& JsonWriter::value(const char* v) { return value(std::string(v)); }

namespace {

const char* node_kind_name(NodeKind kind) {
  switch (kind) {
    case NodeKind::WordState: return "word_state";
    case NodeKind::WordEffect: return "word_effect";
    case NodeKind::Cup: return "cup";
    case NodeKind::Cap: return "cap";
    case NodeKind::Swap: return "swap";
  }
  return "?";
}

NodeKind node_kind_from(const std::string& name) {
  if (name == "word_state") return NodeKind::WordState;
  if (name == "word_effect") return NodeKind::WordEffect;
  if (name == "cup") return NodeKind::Cup;
  if (name == "cap") return NodeKind::Cap;
  if (name == "swap") return NodeKind::Swap;
  throw DiagramError("unknown node kind '" + name + "'");
}

}  // namespace

std::string diagram_to_json(const Diagram& d) {
  JsonWriter w;
  w.begin_object();
  w.key("nodes").begin_array();
  for (const auto& node : d.nodes) {
    w.begin_object();
    w.key("kind").value(node_kind_name(node.kind));
    if (node.kind == NodeKind::WordState || node.kind == NodeKind::WordEffect) {
      w.key("word").value(node.word);
      w.key("type").value(format_type(node.type));
    }
    w.key("ports").begin_array();
    for (WireId p : node.ports) w.value(p);
    w.end_array();
    w.end_object();
  }
  w.end_array();
  w.key("outputs").begin_array();
  for (WireId o : d.outputs) w.value(o);
  w.end_array();
  w.key("wires").begin_array();
  for (const auto& [id, base] : d.wire_base) {
    w.begin_object();
    w.key("id").value(id);
    w.key("base").value(base);
    w.end_object();
  }
  w.end_array();
  w.end_object();
  return w.str() + "\n";
}

Diagram parse_diagram_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  Diagram d;
  for (const auto& jw : j.at("wires")) {
    d.wire_base[jw.at("id").get<int>()] = jw.at("base").get<std::string>();
  }
  for (const auto& jn : j.at("nodes")) {
    Node node;
    node.kind = node_kind_from(jn.at("kind").get<std::string>());
    if (jn.contains("word")) node.word = jn.at("word").get<std::string>();
    if (jn.contains("type")) {
      std::string type_text = jn.at("type").get<std::string>();
      // Accept any base name present in the file.
      std::istringstream in(type_text);
      std::string token;
      GrammarConfig local;
      while (in >> token) {
        auto caret = token.find('^');
        std::string base = token.substr(0, caret);
        if (!local.is_known(base)) local.basic_types.push_back(base);
      }
      node.type = parse_type(type_text, local);
    }
    for (const auto& p : jn.at("ports")) node.ports.push_back(p.get<int>());
    d.nodes.push_back(std::move(node));
  }
  for (const auto& o : j.at("outputs")) d.outputs.push_back(o.get<int>());
  d.validate();
  return d;
}

std::string linkage_to_json(const ReductionLinkage& linkage) {
  JsonWriter w;
  w.begin_object();
  w.key("grammatical").value(linkage.grammatical);
  w.key("types").begin_array();
  for (const auto& st : linkage.flat) w.value(format_type(st));
  w.end_array();
  w.key("cups").begin_array();
  for (const auto& [i, j] : linkage.cups) {
    w.begin_array().value(i).value(j).end_array();
  }
  w.end_array();
  w.key("survivors").begin_array();
  for (int s : linkage.survivors) w.value(s);
  w.end_array();
  w.end_object();
  return w.str() + "\n";
}

std::string params_to_json(const ParameterStore& store) {
  JsonWriter w;
  w.begin_object();
  w.key("values").begin_object();
  for (const auto& [name, value] : store.values()) {
    w.key(name).value(value);
  }
  w.end_object();
  w.key("frozen").begin_array();
  for (const auto& name : store.frozen()) w.value(name);
  w.end_array();
  w.end_object();
  return w.str() + "\n";
}

ParameterStore parse_params_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  ParameterStore store;
  for (const auto& [name, value] : j.at("values").items()) {
    store.set(name, value.get<double>());
  }
  if (j.contains("frozen")) {
    for (const auto& name : j.at("frozen")) {
      store.freeze(name.get<std::string>());
    }
  }
  return store;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read file '" + path + "'");
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write file '" + path + "'");
  out << content;
}

}  // namespace discoqc
