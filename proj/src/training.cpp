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

#include "discoqc/training.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "discoqc/json_io.hpp"

namespace discoqc {

std::vector<std::string> PairTask::parameter_names() const {
  std::set<std::string> names;
  for (const auto& pair : compiled) {
    names.insert(pair.a.params.begin(), pair.a.params.end());
    names.insert(pair.b.params.begin(), pair.b.params.end());
  }
  return {names.begin(), names.end()};
}

PairTask make_pair_task(const Lexicon& lexicon, const std::vector<PairSpec>& specs,
                        ParameterStore& store) {
  PairTask task;
  task.specs = specs;
  for (const auto& spec : specs) {
    SentenceRun a = run_pipeline(lexicon, spec.sentence_a, spec.options_a, store);
    SentenceRun b = run_pipeline(lexicon, spec.sentence_b, spec.options_b, store);
    if (a.circuit.open_qubits.size() != b.circuit.open_qubits.size()) {
      throw TrainingError("pair ('" + spec.sentence_a + "', '" + spec.sentence_b +
                          "') compiles to mismatched open qubit counts");
    }
    task.compiled.push_back({std::move(a.circuit), std::move(b.circuit)});
  }
  return task;
}

double pair_loss(const PairTask& task, const ParameterStore& store) {
  if (task.compiled.empty()) throw TrainingError("empty pair task");
  double total = 0.0;
  for (std::size_t i = 0; i < task.compiled.size(); ++i) {
    MeaningState a = simulate(task.compiled[i].a, store);
    MeaningState b = simulate(task.compiled[i].b, store);
    if (a.amplitudes.squaredNorm() <= 0.0 || b.amplitudes.squaredNorm() <= 0.0) {
      throw TrainingError("zero meaning state in pair " + std::to_string(i) +
                          " ('" + task.specs[i].sentence_a + "', '" +
                          task.specs[i].sentence_b + "')");
    }
    total += 1.0 - fidelity(a, b);
  }
  return total / static_cast<double>(task.compiled.size());
}

namespace {

struct Evaluator {
  const PairTask& task;
  ParameterStore store;
  std::int64_t evaluations = 0;
  std::int64_t budget;

  bool exhausted(std::int64_t needed) const {
    return evaluations + needed > budget;
  }

  double eval(const std::vector<std::string>& names,
              const std::vector<double>& point) {
    for (std::size_t i = 0; i < names.size(); ++i) store.set(names[i], point[i]);
    double loss = pair_loss(task, store);
    if (!std::isfinite(loss)) {
      throw TrainingError("non-finite loss at evaluation " +
                          std::to_string(evaluations));
    }
    ++evaluations;
    return loss;
  }
};

}  // namespace

OptimizeResult optimize(const PairTask& task, const ParameterStore& init,
                        const OptimizeOptions& options) {
  if (options.budget <= 0) throw TrainingError("optimization budget must be positive");

  std::vector<std::string> names;
  for (const auto& name : task.parameter_names()) {
    if (!init.is_frozen(name)) names.push_back(name);
  }

  Evaluator ev{task, init, 0, options.budget};
  std::vector<double> point(names.size());
  for (std::size_t i = 0; i < names.size(); ++i) point[i] = init.at(names[i]);

  OptimizeResult result;
  result.best = init;
  double current = ev.eval(names, point);
  result.best_loss = current;
  std::vector<double> best_point = point;
  result.trace.push_back({0, ev.evaluations, current, current});

  auto note_best = [&](const std::vector<double>& candidate, double loss) {
    if (loss < result.best_loss) {
      result.best_loss = loss;
      best_point = candidate;
    }
  };
  auto checkpoint = [&](int iteration) {
    if (options.checkpoint_every <= 0 ||
        iteration % options.checkpoint_every != 0) {
      return;
    }
    Checkpoint cp;
    cp.iteration = iteration;
    for (std::size_t i = 0; i < names.size(); ++i) cp.params[names[i]] = point[i];
    result.checkpoints.push_back(std::move(cp));
  };

  if (names.empty() || result.best_loss <= 1e-12) {
    result.evaluations = ev.evaluations;
    return result;  // already converged; the input store is returned as-is
  }

  UniformRng rng(options.seed + 1);  // offset from the init stream
  const std::size_t d = names.size();
  int iteration = 0;

  if (options.method == OptimizeMethod::Spsa) {
    double big_a = options.spsa_stability > 0.0 ? options.spsa_stability
                                                : options.budget / 20.0;
    std::vector<double> plus(d), minus(d), delta(d);
    while (!ev.exhausted(2)) {
      double ak = options.spsa_a /
                  std::pow(iteration + 1 + big_a, options.spsa_alpha);
      double ck = options.spsa_c / std::pow(iteration + 1, options.spsa_gamma);
      for (std::size_t i = 0; i < d; ++i) delta[i] = rng.next_sign();
      for (std::size_t i = 0; i < d; ++i) {
        plus[i] = point[i] + ck * delta[i];
        minus[i] = point[i] - ck * delta[i];
      }
      double lp = ev.eval(names, plus);
      double lm = ev.eval(names, minus);
      note_best(plus, lp);
      note_best(minus, lm);
      double scale = (lp - lm) / (2.0 * ck);
      for (std::size_t i = 0; i < d; ++i) {
        point[i] -= ak * scale * delta[i];  // 1/delta_i = delta_i for +-1
      }
      ++iteration;
      result.trace.push_back(
          {iteration, ev.evaluations, std::min(lp, lm), result.best_loss});
      checkpoint(iteration);
    }
    if (!ev.exhausted(1)) {
      double lf = ev.eval(names, point);
      note_best(point, lf);
      result.trace.push_back({++iteration, ev.evaluations, lf, result.best_loss});
    }
  } else {
    std::vector<double> grad(d), probe(d);
    while (!ev.exhausted(static_cast<std::int64_t>(2 * d) + 1)) {
      for (std::size_t i = 0; i < d; ++i) {
        probe = point;
        probe[i] = point[i] + options.fd_step;
        double lp = ev.eval(names, probe);
        probe[i] = point[i] - options.fd_step;
        double lm = ev.eval(names, probe);
        grad[i] = (lp - lm) / (2.0 * options.fd_step);
      }
      for (std::size_t i = 0; i < d; ++i) {
        point[i] -= options.fd_learning_rate * grad[i];
      }
      double loss = ev.eval(names, point);
      note_best(point, loss);
      ++iteration;
      result.trace.push_back({iteration, ev.evaluations, loss, result.best_loss});
      checkpoint(iteration);
    }
  }

  for (std::size_t i = 0; i < d; ++i) result.best.set(names[i], best_point[i]);
  result.evaluations = ev.evaluations;
  return result;
}

std::string trace_to_json(const OptimizeResult& result) {
  JsonWriter w;
  w.begin_object();
  w.key("best_loss").value(result.best_loss);
  w.key("evaluations").value(result.evaluations);
  w.key("trace").begin_array();
  for (const auto& point : result.trace) {
    w.begin_object();
    w.key("iteration").value(point.iteration);
    w.key("evaluations").value(point.evaluations);
    w.key("loss").value(point.loss);
    w.key("best_loss").value(point.best_loss);
    w.end_object();
  }
  w.end_array();
  w.key("checkpoints").begin_array();
  for (const auto& cp : result.checkpoints) {
    w.begin_object();
    w.key("iteration").value(cp.iteration);
    w.key("params").begin_object();
    for (const auto& [name, value] : cp.params) w.key(name).value(value);
    w.end_object();
    w.end_object();
  }
  w.end_array();
  w.end_object();
  return w.str() + "\n";
}

}  // namespace discoqc
