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

// Subcommand bodies for the `dynlist` executable. Exit codes:
//   0  every verdict passed
//   1  a verdict failed (or a protocol aborted)
//   2  the input could not be parsed or violates the protocol's profile

#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "dynlist/protocols.hpp"
#include "dynlist/report.hpp"

namespace dynlist::cli {

inline constexpr int kExitPass = 0;
inline constexpr int kExitVerdict = 1;
inline constexpr int kExitInput = 2;

using ProtocolFactory = std::function<std::shared_ptr<const Protocol>(
    ProtocolKind, const SimParams&)>;

std::shared_ptr<const Protocol> default_factory(ProtocolKind k,
                                                const SimParams& p);

// Values given on the command line; unset fields keep the scenario's (or
// the built-in) defaults.
struct ParamOverrides {
  std::optional<int> s;
  std::optional<std::size_t> c;
  std::optional<unsigned> id_bits;
  std::optional<unsigned> count_bits;

  SimParams apply(SimParams p) const;
};

struct RunOptions {
  std::string scenario_path;
  std::optional<ProtocolKind> proto;
  ParamOverrides params;
  std::string out;  // trace path; empty writes to `out` stream
};

int cmd_run(const RunOptions& opt, std::ostream& out, std::ostream& err,
            const ProtocolFactory& factory = default_factory);

struct FuzzOptions {
  ProtocolKind proto = ProtocolKind::clique;
  std::size_t seeds = 100;
  std::uint64_t first_seed = 1;
  std::size_t rounds = 50;
  std::optional<std::size_t> n0;  // unset: 5 + seed % 16
  double density = 0.3;
  ParamOverrides params;
  bool json = false;
  std::string out;
};

struct FuzzSummary {
  ProtocolKind proto = ProtocolKind::clique;
  std::size_t seeds = 0;
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::size_t rounds_checked = 0;
  std::size_t max_bits_seen = 0;
  std::size_t max_ids_seen = 0;
  std::size_t bound_bits = 0;
  std::optional<std::uint64_t> first_failing_seed;
  std::string first_failure;  // round index and witnesses
};

// Runs the seeded campaign; throws GenerationError on degenerate params.
FuzzSummary fuzz(const FuzzOptions& opt,
                 const ProtocolFactory& factory = default_factory);

int cmd_fuzz(const FuzzOptions& opt, std::ostream& out, std::ostream& err,
             const ProtocolFactory& factory = default_factory);

struct BenchOptions {
  // (protocol, n0) cells; see parse_bench_matrix.
  std::vector<std::pair<ProtocolKind, std::size_t>> matrix;
  std::size_t rounds = 50;
  std::size_t seeds = 3;
  double density = 0.3;
  bool json = false;
};

// "clique:10,wedge:20" -> cells. An empty string is an empty matrix.
std::vector<std::pair<ProtocolKind, std::size_t>> parse_bench_matrix(
    const std::string& text);
std::vector<std::pair<ProtocolKind, std::size_t>> default_bench_matrix();

int cmd_bench(const BenchOptions& opt, std::ostream& out, std::ostream& err);

struct CorpusOptions {
  bool json = false;
  std::string out_dir;  // if set, scenario and trace files are written here
};

int cmd_corpus(const CorpusOptions& opt, std::ostream& out, std::ostream& err);

struct GenOptions {
  ProtocolKind proto = ProtocolKind::clique;
  std::uint64_t seed = 1;
  std::size_t n0 = 10;
  std::size_t rounds = 20;
  double density = 0.3;
  ParamOverrides params;
  std::string out;  // empty writes to `out` stream
};

// Writes one generated scenario in the canonical file format.
int cmd_gen(const GenOptions& opt, std::ostream& out, std::ostream& err);

// One-line description of a failing round's witnesses.
std::string describe_failure(const RoundReport& r);

}  // namespace dynlist::cli
