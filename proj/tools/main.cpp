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

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>

#include "discoqc/json_io.hpp"
#include "discoqc/pipeline.hpp"
#include "discoqc/training.hpp"

namespace {

using namespace discoqc;

Lexicon load_lexicon(const std::string& path) {
  if (!path.empty()) return Lexicon::from_json(read_file(path));
  if (const char* env = std::getenv("DISCOQC_LEXICON"); env && *env) {
    return Lexicon::from_json(read_file(env));
  }
  return Lexicon::builtin();
}

PipelineForm parse_form(const std::string& name) {
  if (name == "bigraph") return PipelineForm::Bigraph;
  if (name == "grammar-meaning") return PipelineForm::GrammarMeaning;
  if (name == "choi") return PipelineForm::Choi;
  throw CLI::ValidationError("--form", "unknown form '" + name + "'");
}

RewriteMode parse_rewrite(const std::string& name) {
  if (name == "none") return RewriteMode::None;
  if (name == "snake") return RewriteMode::Snake;
  throw CLI::ValidationError("--rewrite", "unknown rewrite '" + name + "'");
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
  } else {
    write_file(out_path, text);
  }
}

void check_init(const std::string& init) {
  if (init != "zero" && init != "random") {
    throw CLI::ValidationError("--init", "unknown init '" + init + "'");
  }
}

/// Fills parameters referenced by the circuits: from the params file when
/// given, else zeros or seeded uniform angles.
ParameterStore prepare_store(const std::string& params_path,
                             const std::string& init, std::uint64_t seed,
                             const std::vector<const Circuit*>& circuits,
                             bool strict) {
  check_init(init);
  ParameterStore store;
  if (!params_path.empty()) store = parse_params_json(read_file(params_path));
  std::vector<std::string> missing;
  for (const Circuit* c : circuits) {
    for (const auto& name : c->params) {
      if (!store.has(name)) missing.push_back(name);
    }
  }
  std::sort(missing.begin(), missing.end());
  missing.erase(std::unique(missing.begin(), missing.end()), missing.end());
  if (!missing.empty() && strict && !params_path.empty()) {
    throw ParameterError("unresolved parameter '" + missing.front() + "'");
  }
  if (init == "random") {
    ParameterStore fresh;
    fresh.randomize(missing, seed);
    for (const auto& name : missing) store.set(name, fresh.at(name));
  } else {
    for (const auto& name : missing) store.ensure(name, 0.0);
  }
  return store;
}

int cmd_parse(const Lexicon& lexicon, const std::string& sentence,
              const std::string& out_path) {
  ReductionLinkage linkage = parse_sentence(lexicon, sentence);
  emit(linkage_to_json(linkage), out_path);
  return linkage.grammatical ? 0 : 1;
}

int cmd_diagram(const Lexicon& lexicon, const std::string& sentence,
                const std::string& passes, const std::string& format,
                const std::string& out_path) {
  auto words = lookup_words(lexicon, sentence);
  ReductionLinkage linkage = parse_sentence(lexicon, sentence);
  if (!linkage.grammatical) {
    std::cerr << "ungrammatical sentence\n";
    return 1;
  }
  Diagram d = from_reduction(words, linkage);
  std::istringstream in(passes);
  std::string pass;
  while (std::getline(in, pass, ',')) {
    if (pass.empty() || pass == "none") continue;
    if (pass == "caps") {
      d = substitute_cap_words(d, lexicon.cap_word_texts(), lexicon.grammar);
    } else if (pass == "snake") {
      d = rewrite_diagram(lexicon, d, RewriteMode::Snake);
    } else if (pass == "bigraph") {
      d = bigraph_rewrite(d, lexicon.grammar);
    } else {
      throw CLI::ValidationError("--passes", "unknown pass '" + pass + "'");
    }
  }
  emit(format == "dot" ? to_dot(d) : diagram_to_json(d), out_path);
  return 0;
}

int cmd_compile(const Lexicon& lexicon, const std::string& sentence,
                const std::string& form, const std::string& rewrite,
                bool qasm, const std::string& params_path,
                const std::string& init, std::uint64_t seed,
                const std::string& out_path) {
  check_init(init);
  PipelineOptions options{parse_form(form), parse_rewrite(rewrite)};
  ParameterStore store;
  if (!params_path.empty()) store = parse_params_json(read_file(params_path));
  SentenceRun run = run_pipeline(lexicon, sentence, options, store);
  if (init == "random") {
    ParameterStore fresh;
    fresh.randomize(run.circuit.params, seed);
    for (const auto& name : run.circuit.params) {
      if (params_path.empty() || !store.has(name)) store.set(name, fresh.at(name));
    }
  }
  emit(export_circuit(run.circuit, CircuitFormat::Json), out_path);
  if (qasm) {
    std::string qasm_text = export_circuit(run.circuit, CircuitFormat::Qasm, &store);
    emit(qasm_text, out_path.empty() ? "" : out_path + ".qasm");
  }
  return 0;
}

int cmd_simulate(const std::string& circuit_path, const std::string& params_path,
                 const std::string& init, std::uint64_t seed,
                 const std::string& out_path) {
  Circuit c = parse_circuit_json(read_file(circuit_path));
  ParameterStore store = prepare_store(params_path, init, seed, {&c},
                                       /*strict=*/true);
  MeaningState state = simulate(c, store);
  emit(meaning_to_json(state), out_path);
  return 0;
}

int cmd_compare(const Lexicon& lexicon, const std::string& sentence_a,
                const std::string& sentence_b, const std::string& form,
                const std::string& rewrite, const std::string& params_path,
                const std::string& init, std::uint64_t seed,
                const std::string& out_path) {
  check_init(init);
  PipelineOptions options{parse_form(form), parse_rewrite(rewrite)};
  ParameterStore store;
  if (!params_path.empty()) store = parse_params_json(read_file(params_path));
  SentenceRun a = run_pipeline(lexicon, sentence_a, options, store);
  SentenceRun b = run_pipeline(lexicon, sentence_b, options, store);
  if (a.circuit.open_qubits.size() != b.circuit.open_qubits.size()) {
    std::cerr << "open wire mismatch between the two sentences\n";
    return 2;
  }
  if (init == "random") {
    std::vector<std::string> names = a.circuit.params;
    names.insert(names.end(), b.circuit.params.begin(), b.circuit.params.end());
    std::sort(names.begin(), names.end());
    names.erase(std::unique(names.begin(), names.end()), names.end());
    ParameterStore fresh;
    fresh.randomize(names, seed);
    for (const auto& name : names) {
      if (params_path.empty() || !store.has(name)) store.set(name, fresh.at(name));
    }
  }
  MeaningState ma = simulate(a.circuit, store);
  MeaningState mb = simulate(b.circuit, store);
  double fid = fidelity(ma, mb);

  JsonWriter w;
  w.begin_object();
  w.key("sentence_a").value(sentence_a);
  w.key("sentence_b").value(sentence_b);
  w.key("fidelity").value(fid);
  auto write_state = [&](const char* key, const MeaningState& m) {
    w.key(key).begin_array();
    for (Eigen::Index i = 0; i < m.amplitudes.size(); ++i) {
      w.begin_array().value(m.amplitudes(i).real()).value(m.amplitudes(i).imag()).end_array();
    }
    w.end_array();
  };
  write_state("meaning_a", ma);
  write_state("meaning_b", mb);
  w.end_object();
  emit(w.str() + "\n", out_path);
  return 0;
}

int cmd_train(const Lexicon& lexicon, const std::string& method_name, int budget,
              std::uint64_t seed, const std::string& form,
              const std::string& rewrite, const std::string& params_out,
              const std::string& trace_out, const std::string& out_path,
              double spsa_a, double spsa_c) {
  if (lexicon.pairs.empty()) {
    std::cerr << "the lexicon defines no sentence pairs\n";
    return 2;
  }
  OptimizeOptions options;
  if (method_name == "spsa") {
    options.method = OptimizeMethod::Spsa;
  } else if (method_name == "fdgd") {
    options.method = OptimizeMethod::FiniteDifference;
  } else {
    throw CLI::ValidationError("--method", "unknown method '" + method_name + "'");
  }
  options.budget = budget;
  options.seed = seed;
  options.spsa_a = spsa_a;
  options.spsa_c = spsa_c;

  PipelineOptions pipeline{parse_form(form), parse_rewrite(rewrite)};
  std::vector<PairSpec> specs;
  for (const auto& [a, b] : lexicon.pairs) {
    specs.push_back({a, b, pipeline, pipeline});
  }
  ParameterStore store;
  PairTask task = make_pair_task(lexicon, specs, store);
  store.randomize(task.parameter_names(), seed);
  OptimizeResult result = optimize(task, store, options);

  if (!params_out.empty()) write_file(params_out, params_to_json(result.best));
  if (!trace_out.empty()) write_file(trace_out, trace_to_json(result));

  JsonWriter w;
  w.begin_object();
  w.key("pairs").value(static_cast<int>(specs.size()));
  w.key("method").value(method_name);
  w.key("seed").value(static_cast<std::int64_t>(seed));
  w.key("evaluations").value(result.evaluations);
  w.key("final_loss").value(result.best_loss);
  w.end_object();
  emit(w.str() + "\n", out_path);
  return 0;
}

int cmd_export(const std::string& circuit_path, const std::string& diagram_path,
               const std::string& format, const std::string& params_path,
               const std::string& out_path) {
  if (!circuit_path.empty()) {
    Circuit c = parse_circuit_json(read_file(circuit_path));
    if (format == "qasm") {
      ParameterStore store = prepare_store(params_path, "zero", 0, {&c},
                                           /*strict=*/true);
      emit(export_circuit(c, CircuitFormat::Qasm, &store), out_path);
    } else {
      emit(export_circuit(c, CircuitFormat::Json), out_path);
    }
    return 0;
  }
  if (!diagram_path.empty()) {
    Diagram d = parse_diagram_json(read_file(diagram_path));
    emit(format == "dot" ? to_dot(d) : diagram_to_json(d), out_path);
    return 0;
  }
  std::cerr << "export needs --circuit or --diagram\n";
  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"pregroup sentences to parametrised quantum circuits"};
  app.require_subcommand(1);

  std::string lexicon_path;
  app.add_option("--lexicon", lexicon_path,
                 "lexicon JSON (default: $DISCOQC_LEXICON or the built-in corpus)");

  std::string sentence, sentence_b, out_path, params_path;
  std::string form = "bigraph", rewrite = "none", format = "json";
  std::string init = "zero", method = "spsa", passes = "none";
  std::string circuit_path, diagram_path, params_out, trace_out;
  std::uint64_t seed = 0;
  int budget = 2000;
  double spsa_a = 0.1, spsa_c = 0.1;
  bool qasm = false;

  auto* parse_cmd = app.add_subcommand("parse", "grammaticality and reduction linkage");
  parse_cmd->add_option("sentence", sentence)->required();
  parse_cmd->add_option("-o,--out", out_path);

  auto* diagram_cmd = app.add_subcommand("diagram", "export the sentence diagram");
  diagram_cmd->add_option("sentence", sentence)->required();
  diagram_cmd->add_option("--passes", passes, "comma list of caps,snake,bigraph");
  diagram_cmd->add_option("--format", format, "json|dot");
  diagram_cmd->add_option("-o,--out", out_path);

  auto* rewrite_cmd = app.add_subcommand("rewrite", "rewrite and export the diagram");
  rewrite_cmd->add_option("sentence", sentence)->required();
  rewrite_cmd->add_option("--passes", passes, "comma list of caps,snake,bigraph")
      ->default_val("snake");
  rewrite_cmd->add_option("--format", format, "json|dot");
  rewrite_cmd->add_option("-o,--out", out_path);

  auto* compile_cmd = app.add_subcommand("compile", "compile a sentence to a circuit");
  compile_cmd->add_option("sentence", sentence)->required();
  compile_cmd->add_option("--form", form, "bigraph|grammar-meaning|choi");
  compile_cmd->add_option("--rewrite", rewrite, "none|snake");
  compile_cmd->add_flag("--qasm", qasm, "also write the qasm subset");
  compile_cmd->add_option("--params", params_path);
  compile_cmd->add_option("--init", init, "zero|random (for qasm angles)");
  compile_cmd->add_option("--seed", seed);
  compile_cmd->add_option("-o,--out", out_path);

  auto* simulate_cmd = app.add_subcommand("simulate", "simulate a circuit file");
  simulate_cmd->add_option("circuit", circuit_path)->required();
  simulate_cmd->add_option("--params", params_path);
  simulate_cmd->add_option("--init", init, "zero|random for missing parameters");
  simulate_cmd->add_option("--seed", seed);
  simulate_cmd->add_option("-o,--out", out_path);

  auto* compare_cmd = app.add_subcommand("compare", "fidelity of two sentences");
  compare_cmd->add_option("sentence_a", sentence)->required();
  compare_cmd->add_option("sentence_b", sentence_b)->required();
  compare_cmd->add_option("--form", form);
  compare_cmd->add_option("--rewrite", rewrite);
  compare_cmd->add_option("--params", params_path);
  compare_cmd->add_option("--init", init, "zero|random");
  compare_cmd->add_option("--seed", seed);
  compare_cmd->add_option("-o,--out", out_path);

  auto* train_cmd = app.add_subcommand("train", "optimize shared parameters on the lexicon pairs");
  train_cmd->add_option("--method", method, "spsa|fdgd");
  train_cmd->add_option("--budget", budget, "loss evaluations");
  train_cmd->add_option("--seed", seed);
  train_cmd->add_option("--form", form);
  train_cmd->add_option("--rewrite", rewrite);
  train_cmd->add_option("--spsa-a", spsa_a);
  train_cmd->add_option("--spsa-c", spsa_c);
  train_cmd->add_option("--params-out", params_out);
  train_cmd->add_option("--trace-out", trace_out);
  train_cmd->add_option("-o,--out", out_path);

  auto* export_cmd = app.add_subcommand("export", "convert circuit/diagram files");
  export_cmd->add_option("--circuit", circuit_path);
  export_cmd->add_option("--diagram", diagram_path);
  export_cmd->add_option("--format", format, "json|qasm|dot");
  export_cmd->add_option("--params", params_path);
  export_cmd->add_option("-o,--out", out_path);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    Lexicon lexicon = load_lexicon(lexicon_path);
    if (parse_cmd->parsed()) return cmd_parse(lexicon, sentence, out_path);
    if (diagram_cmd->parsed()) {
      return cmd_diagram(lexicon, sentence, passes, format, out_path);
    }
    if (rewrite_cmd->parsed()) {
      return cmd_diagram(lexicon, sentence, passes, format, out_path);
    }
    if (compile_cmd->parsed()) {
      return cmd_compile(lexicon, sentence, form, rewrite, qasm, params_path,
                         init, seed, out_path);
    }
    if (simulate_cmd->parsed()) {
      return cmd_simulate(circuit_path, params_path, init, seed, out_path);
    }
    if (compare_cmd->parsed()) {
      return cmd_compare(lexicon, sentence, sentence_b, form, rewrite,
                         params_path, init, seed, out_path);
    }
    if (train_cmd->parsed()) {
      return cmd_train(lexicon, method, budget, seed, form, rewrite, params_out,
                       trace_out, out_path, spsa_a, spsa_c);
    }
    if (export_cmd->parsed()) {
      return cmd_export(circuit_path, diagram_path, format, params_path, out_path);
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const UngrammaticalError& e) {
    std::cerr << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
