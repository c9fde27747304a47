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

#include "discoqc/pipeline.hpp"

namespace discoqc {

struct TrainingError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// One synonymy pair: two sentences and the pipeline form compiled per side.
struct PairSpec {
  std::string sentence_a;
  std::string sentence_b;
  PipelineOptions options_a;
  PipelineOptions options_b;
};

/// A compiled training task. Both sides of every pair must leave the same
/// number of open qubits.
struct PairTask {
  std::vector<PairSpec> specs;
  struct CompiledPair {
    Circuit a;
    Circuit b;
  };
  std::vector<CompiledPair> compiled;

  /// Parameter names referenced by any compiled circuit, sorted.
  std::vector<std::string> parameter_names() const;
};

PairTask make_pair_task(const Lexicon& lexicon, const std::vector<PairSpec>& specs,
                        ParameterStore& store);

/// Mean over pairs of 1 - fidelity(simulate(A), simulate(B)); in [0, 1].
/// A zero meaning state on either side is an error naming the pair.
double pair_loss(const PairTask& task, const ParameterStore& store);

enum class OptimizeMethod { Spsa, FiniteDifference };

struct OptimizeOptions {
  OptimizeMethod method = OptimizeMethod::Spsa;
  int budget = 2000;  // loss evaluations
  std::uint64_t seed = 0;
  // SPSA gain sequences a_k = a/(k+1+A)^alpha, c_k = c/(k+1)^gamma.
  double spsa_a = 0.1;
  double spsa_c = 0.1;
  double spsa_alpha = 0.602;
  double spsa_gamma = 0.101;
  double spsa_stability = 0.0;  // A; defaults to budget/20 when 0
  // Central finite differences.
  double fd_step = 1e-4;
  double fd_learning_rate = 0.5;
  // A parameter snapshot lands in the trace every this many iterations.
  int checkpoint_every = 50;
};

struct TracePoint {
  int iteration = 0;
  std::int64_t evaluations = 0;
  double loss = 0.0;       // loss observed this iteration
  double best_loss = 0.0;  // non-increasing
};

struct Checkpoint {
  int iteration = 0;
  std::map<std::string, double> params;
};

struct OptimizeResult {
  ParameterStore best;
  double best_loss = 0.0;
  std::int64_t evaluations = 0;
  std::vector<TracePoint> trace;
  std::vector<Checkpoint> checkpoints;
};

/// Derivative-free / finite-difference optimization of the store's free
/// parameters (those referenced by the task). Deterministic given the seed;
/// returns the best-seen parameters. Non-finite losses abort.
OptimizeResult optimize(const PairTask& task, const ParameterStore& init,
                        const OptimizeOptions& options);

std::string trace_to_json(const OptimizeResult& result);

}  // namespace discoqc
