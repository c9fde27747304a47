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

#include "discoqc/parameters.hpp"

#include <cmath>

namespace discoqc {

double ParameterStore::at(const std::string& name) const {
  auto it = values_.find(name);
  if (it == values_.end()) {
    throw ParameterError("unresolved parameter '" + name + "'");
  }
  return it->second;
}

void ParameterStore::ensure(const std::string& name, double value) {
  values_.emplace(name, value);
}

std::vector<std::string> ParameterStore::names() const {
  std::vector<std::string> out;
  out.reserve(values_.size());
  for (const auto& [name, value] : values_) out.push_back(name);
  return out;
}

std::vector<std::string> ParameterStore::free_names() const {
  std::vector<std::string> out;
  for (const auto& [name, value] : values_) {
    if (!frozen_.count(name)) out.push_back(name);
  }
  return out;
}

void ParameterStore::randomize(const std::vector<std::string>& names,
                               std::uint64_t seed) {
  UniformRng rng(seed);
  for (const auto& name : names) {
    double angle = rng.next_angle();
    if (!frozen_.count(name)) values_[name] = angle;
  }
}

namespace {

std::uint64_t splitmix64(std::uint64_t& x) {
  x += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = x;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace

UniformRng::UniformRng(std::uint64_t seed) {
  std::uint64_t x = seed;
  s0_ = splitmix64(x);
  s1_ = splitmix64(x);
}

std::uint64_t UniformRng::next_raw() {
  std::uint64_t x = s0_;
  const std::uint64_t y = s1_;
  s0_ = y;
  x ^= x << 23;
  s1_ = x ^ y ^ (x >> 17) ^ (y >> 26);
  return s1_ + y;
}

double UniformRng::next_unit() {
  return std::ldexp(static_cast<double>(next_raw() >> 11), -53);
}

double UniformRng::next_angle() { return next_unit() * 2.0 * M_PI; }

int UniformRng::next_sign() { return (next_raw() & 1u) ? 1 : -1; }

}  // namespace discoqc
