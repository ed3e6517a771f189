// Copyright 2026 The dynlist Authors
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

#include <iostream>
#include <map>
#include <string>

#include "CLI11.hpp"
#include "dynlist/cli.hpp"

namespace {

const std::map<std::string, dynlist::ProtocolKind> kProtocols{
    {"clique", dynlist::ProtocolKind::clique},
    {"wedge", dynlist::ProtocolKind::wedge},
    {"batched_triangle", dynlist::ProtocolKind::batched_triangle},
    {"batched_clique", dynlist::ProtocolKind::batched_clique},
};

void add_param_flags(CLI::App* cmd, dynlist::cli::ParamOverrides& p) {
  cmd->add_option("--s", p.s, "clique size for clique protocols")
      ->check(CLI::Range(3, 64));
  cmd->add_option("--c", p.c, "per-node incidence bound (batched)")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--id-bits", p.id_bits, "bits per node id")
      ->check(CLI::Range(1, 64));
  cmd->add_option("--count-bits", p.count_bits, "bits per id-set count")
      ->check(CLI::Range(1, 64));
}

}  // namespace

int main(int argc, char** argv) {
  namespace cli = dynlist::cli;
  CLI::App app{"dynlist: one-round subgraph listing in dynamic networks"};
  app.require_subcommand(1);

  cli::RunOptions run;
  std::string run_proto;
  auto* run_cmd = app.add_subcommand("run", "replay a scenario file and verify");
  run_cmd->add_option("scenario", run.scenario_path, "scenario JSON file")
      ->required();
  run_cmd->add_option("--proto", run_proto, "override the scenario protocol")
      ->check(CLI::IsMember(kProtocols));
  add_param_flags(run_cmd, run.params);
  run_cmd->add_option("--out", run.out, "trace output path (default stdout)");
  run_cmd->add_flag("--json", "accepted for symmetry; traces are always JSON");

  cli::FuzzOptions fz;
  std::string fz_proto = "clique";
  std::size_t fz_n0 = 0;
  auto* fuzz_cmd = app.add_subcommand("fuzz", "run seeded random scenarios");
  fuzz_cmd->add_option("--proto", fz_proto, "protocol")
      ->check(CLI::IsMember(kProtocols));
  fuzz_cmd->add_option("--seeds", fz.seeds, "number of seeds");
  fuzz_cmd->add_option("--seed", fz.first_seed, "first seed");
  fuzz_cmd->add_option("--rounds", fz.rounds, "rounds per scenario");
  auto* n0_opt = fuzz_cmd->add_option(
      "--n0", fz_n0, "initial node count (default 5 + seed % 16)");
  fuzz_cmd->add_option("--density", fz.density, "initial edge probability")
      ->check(CLI::Range(0.0, 1.0));
  add_param_flags(fuzz_cmd, fz.params);
  fuzz_cmd->add_flag("--json", fz.json, "machine-readable summary");
  fuzz_cmd->add_option("--out", fz.out, "summary output path");

  cli::BenchOptions bench;
  std::string matrix;
  auto* bench_cmd = app.add_subcommand("bench", "time the standard workloads");
  auto* matrix_opt = bench_cmd->add_option(
      "--matrix", matrix, "cells as protocol:n0,... (empty for none)");
  bench_cmd->add_option("--rounds", bench.rounds, "rounds per scenario");
  bench_cmd->add_option("--seeds", bench.seeds, "scenarios per cell");
  bench_cmd->add_option("--density", bench.density, "initial edge probability")
      ->check(CLI::Range(0.0, 1.0));
  bench_cmd->add_flag("--json", bench.json, "machine-readable report");

  cli::CorpusOptions corpus;
  auto* corpus_cmd =
      app.add_subcommand("corpus", "replay the adversarial scenario suite");
  corpus_cmd->add_flag("--json", corpus.json, "machine-readable report");
  corpus_cmd->add_option("--out", corpus.out_dir,
                         "directory for scenario and trace files");

  cli::GenOptions gen;
  std::string gen_proto = "clique";
  auto* gen_cmd =
      app.add_subcommand("gen", "write one seeded scenario file");
  gen_cmd->add_option("--proto", gen_proto, "protocol")
      ->check(CLI::IsMember(kProtocols));
  gen_cmd->add_option("--seed", gen.seed, "generator seed");
  gen_cmd->add_option("--n0", gen.n0, "initial node count");
  gen_cmd->add_option("--rounds", gen.rounds, "number of rounds");
  gen_cmd->add_option("--density", gen.density, "initial edge probability")
      ->check(CLI::Range(0.0, 1.0));
  add_param_flags(gen_cmd, gen.params);
  gen_cmd->add_option("--out", gen.out, "scenario output path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : cli::kExitInput;
  }

  try {
    if (*run_cmd) {
      if (!run_proto.empty()) run.proto = kProtocols.at(run_proto);
      return cli::cmd_run(run, std::cout, std::cerr);
    }
    if (*fuzz_cmd) {
      fz.proto = kProtocols.at(fz_proto);
      if (*n0_opt) fz.n0 = fz_n0;
      return cli::cmd_fuzz(fz, std::cout, std::cerr);
    }
    if (*bench_cmd) {
      bench.matrix = *matrix_opt ? cli::parse_bench_matrix(matrix)
                                 : cli::default_bench_matrix();
      return cli::cmd_bench(bench, std::cout, std::cerr);
    }
    if (*gen_cmd) {
      gen.proto = kProtocols.at(gen_proto);
      return cli::cmd_gen(gen, std::cout, std::cerr);
    }
    if (*corpus_cmd) return cli::cmd_corpus(corpus, std::cout, std::cerr);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return cli::kExitInput;
  }
  return cli::kExitInput;
}
