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

#include <sstream>
#include <string>
#include <vector>

#include "discoqc/diagram.hpp"
#include "discoqc/parameters.hpp"

namespace discoqc {

/// Fixed 17-significant-digit float formatting; all emitted JSON goes
/// through this so repeated runs are byte-identical and doubles round-trip
/// exactly.
std::string format_double(double value);

/// Minimal streaming JSON writer with stable key order (keys are emitted in
/// call order) and deterministic number formatting.
class JsonWriter {
 public:
  JsonWriter& begin_object();
  JsonWriter& end_object();
  JsonWriter& begin_array();
  JsonWriter& end_array();
  JsonWriter& key(const std::string& name);
  JsonWriter& value(double v);
  JsonWriter& value(int v);
  JsonWriter& value(std::int64_t v);
  JsonWriter& value(bool v);
  JsonWriter& value(const std::string& v);
  JsonWriter& value(const char* v);

  std::string str() const { return out_.str(); }

 private:
  void separate();
  void indent();
  std::ostringstream out_;
  std::vector<int> counts_;
  bool pending_key_ = false;
};

std::string escape_json(const std::string& s);

std::string diagram_to_json(const Diagram& d);
Diagram parse_diagram_json(const std::string& text);

std::string linkage_to_json(const ReductionLinkage& linkage);

std::string params_to_json(const ParameterStore& store);
ParameterStore parse_params_json(const std::string& text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace discoqc
