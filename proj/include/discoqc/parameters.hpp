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

#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace discoqc {

struct ParameterError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Named real-valued angle assignments (radians), shared across word
/// ansatze. Frozen names are excluded from optimization but stay readable
/// and settable.
class ParameterStore {
 public:
  bool has(const std::string& name) const { return values_.count(name) > 0; }
  double at(const std::string& name) const;
  void set(const std::string& name, double value) { values_[name] = value; }
  /// Registers the name with a default value if absent.
  void ensure(const std::string& name, double value = 0.0);

  void freeze(const std::string& name) { frozen_.insert(name); }
  bool is_frozen(const std::string& name) const { return frozen_.count(name) > 0; }

  std::vector<std::string> names() const;
  /// Names eligible for optimization, in sorted order.
  std::vector<std::string> free_names() const;
  const std::set<std::string>& frozen() const { return frozen_; }

  /// Assigns uniform angles in [0, 2*pi) to the given names (frozen names
  /// skipped), reproducibly from the seed.
  void randomize(const std::vector<std::string>& names, std::uint64_t seed);

  std::size_t size() const { return values_.size(); }
  const std::map<std::string, double>& values() const { return values_; }

 private:
  std::map<std::string, double> values_;
  std::set<std::string> frozen_;
};

/// Deterministic pseudo-random stream (splitmix64-seeded xorshift128+) with
/// a fixed bit-to-double mapping, so draws do not depend on the standard
/// library's distribution implementations.
class UniformRng {
 public:
  explicit UniformRng(std::uint64_t seed);
  std::uint64_t next_raw();
  double next_unit();   // [0, 1)
  double next_angle();  // [0, 2*pi)
  int next_sign();      // +1 or -1

 private:
  std::uint64_t s0_;
  std::uint64_t s1_;
};

}  // namespace discoqc
