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

#include "dynlist/cli.hpp"

#include <chrono>
#include <filesystem>
#include <iomanip>
#include <sstream>

#include "dynlist/engine.hpp"
#include "dynlist/io.hpp"
#include "dynlist/oracle.hpp"
#include "dynlist/workload.hpp"
#include "json.hpp"

namespace dynlist::cli {

using nlohmann::json;

std::shared_ptr<const Protocol> default_factory(ProtocolKind k,
                                                const SimParams& p) {
  return make_protocol(k, p.c);
}

SimParams ParamOverrides::apply(SimParams p) const {
  if (s) p.clique.s = *s;
  if (c) p.c = *c;
  if (id_bits) p.enc.id_bits = *id_bits;
  if (count_bits) p.enc.count_bits = *count_bits;
  return p;
}

std::string describe_failure(const RoundReport& r) {
  std::ostringstream os;
  const Verdict& v = r.verdict;
  os << "round " << r.round_index << ":";
  if (!v.sound) {
    os << " phantom";
    for (const auto& [node, sg] : v.phantom) {
      os << " [node " << node << " lists " << to_string(sg) << "]";
    }
  }
  if (!v.complete) {
    os << " missing";
    for (const auto& sg : v.missing) os << " [" << to_string(sg) << "]";
  }
  if (!v.bandwidth_ok) {
    os << " bandwidth " << v.max_bits_seen << " > " << v.bound_bits << " bits";
  }
  return os.str();
}

namespace {

int report_scenario_error(const ScenarioError& e, std::ostream& err) {
  err << "error: " << e.what() << "\n";
  return e.cause() == ScenarioError::Cause::invalid_input ? kExitInput
                                                          : kExitVerdict;
}

bool valid_params(const SimParams& p, std::ostream& err) {
  if (p.clique.s < 3) {
    err << "error: --s must be at least 3\n";
    return false;
  }
  if (p.c < 1) {
    err << "error: --c must be at least 1\n";
    return false;
  }
  if (p.enc.id_bits < 1 || p.enc.id_bits > 64 || p.enc.count_bits < 1 ||
      p.enc.count_bits > 64) {
    err << "error: bit widths must lie in [1, 64]\n";
    return false;
  }
  return true;
}

}  // namespace

// ---------------------------------------------------------------------------
// run

int cmd_run(const RunOptions& opt, std::ostream& out, std::ostream& err,
            const ProtocolFactory& factory) {
  ScenarioFile file;
  try {
    file = read_scenario_file(opt.scenario_path);
  } catch (const ParseError& e) {
    err << "error: " << opt.scenario_path << ": " << e.what() << "\n";
    return kExitInput;
  }
  if (opt.proto) file.protocol = *opt.proto;
  file.params = opt.params.apply(file.params);
  if (!valid_params(file.params, err)) return kExitInput;

  Trace trace;
  try {
    trace = run_scenario(file.scenario.g0, file.scenario.rounds,
                         factory(file.protocol, file.params), file.params);
  } catch (const ScenarioError& e) {
    return report_scenario_error(e, err);
  }

  const std::string text = serialize_trace(trace);
  if (opt.out.empty()) {
    out << text;
  } else {
    try {
      write_text_file(opt.out, text);
    } catch (const std::exception& e) {
      err << "error: " << e.what() << "\n";
      return kExitInput;
    }
  }
  for (const auto& r : trace.rounds) {
    if (!r.verdict.passed()) {
      err << "verdict failed: " << describe_failure(r) << "\n";
      return kExitVerdict;
    }
  }
  return kExitPass;
}

// ---------------------------------------------------------------------------
// fuzz

FuzzSummary fuzz(const FuzzOptions& opt, const ProtocolFactory& factory) {
  FuzzSummary sum;
  sum.proto = opt.proto;
  const SimParams params = opt.params.apply(SimParams{});
  sum.bound_bits = bandwidth_bound(opt.proto, params);
  for (std::size_t i = 0; i < opt.seeds; ++i) {
    const std::uint64_t seed = opt.first_seed + i;
    const std::size_t n0 = opt.n0 ? *opt.n0 : 5 + seed % 16;
    GenParams gp = GenParams::for_protocol(opt.proto, seed, n0, opt.rounds,
                                           opt.density, params.c);
    Scenario sc = gen_scenario(gp);
    ++sum.seeds;
    std::string failure;
    try {
      Trace t = run_scenario(sc.g0, sc.rounds, factory(opt.proto, params),
                             params);
      sum.rounds_checked += t.rounds.size();
      for (const auto& r : t.rounds) {
        sum.max_bits_seen = std::max(sum.max_bits_seen, r.max_message_bits);
        sum.max_ids_seen = std::max(sum.max_ids_seen, r.max_message_ids);
        if (failure.empty() && !r.verdict.passed()) {
          failure = describe_failure(r);
        }
      }
    } catch (const ScenarioError& e) {
      failure = e.what();
    }
    if (failure.empty()) {
      ++sum.passed;
    } else {
      ++sum.failed;
      if (!sum.first_failing_seed) {
        sum.first_failing_seed = seed;
        sum.first_failure = failure;
      }
    }
  }
  return sum;
}

int cmd_fuzz(const FuzzOptions& opt, std::ostream& out, std::ostream& err,
             const ProtocolFactory& factory) {
  if (!valid_params(opt.params.apply(SimParams{}), err)) return kExitInput;
  FuzzSummary sum;
  try {
    sum = fuzz(opt, factory);
  } catch (const GenerationError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  }

  std::ostringstream text;
  if (opt.json) {
    json j{{"protocol", to_string(sum.proto)},
           {"seeds", sum.seeds},
           {"passed", sum.passed},
           {"failed", sum.failed},
           {"rounds_checked", sum.rounds_checked},
           {"max_bits_seen", sum.max_bits_seen},
           {"max_ids_seen", sum.max_ids_seen},
           {"bound_bits", sum.bound_bits}};
    if (sum.first_failing_seed) {
      j["first_failure"] = {{"seed", *sum.first_failing_seed},
                            {"witness", sum.first_failure}};
    } else {
      j["first_failure"] = nullptr;
    }
    text << j.dump(2) << "\n";
  } else {
    text << "protocol " << to_string(sum.proto) << ": " << sum.passed << "/"
         << sum.seeds << " seeds passed, " << sum.failed << " failed, "
         << sum.rounds_checked << " rounds checked\n"
         << "max message " << sum.max_bits_seen << " bits ("
         << sum.max_ids_seen << " ids), bound " << sum.bound_bits << " bits\n";
    if (sum.first_failing_seed) {
      text << "first failing seed " << *sum.first_failing_seed << ": "
           << sum.first_failure << "\n";
    }
  }
  if (opt.out.empty()) {
    out << text.str();
  } else {
    write_text_file(opt.out, text.str());
  }
  return sum.failed == 0 ? kExitPass : kExitVerdict;
}

// ---------------------------------------------------------------------------
// bench

std::vector<std::pair<ProtocolKind, std::size_t>> parse_bench_matrix(
    const std::string& text) {
  std::vector<std::pair<ProtocolKind, std::size_t>> cells;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    auto colon = item.find(':');
    if (colon == std::string::npos) {
      throw std::invalid_argument("matrix cell \"" + item +
                                  "\" is not protocol:n0");
    }
    auto kind = parse_protocol_kind(item.substr(0, colon));
    if (!kind) {
      throw std::invalid_argument("unknown protocol in \"" + item + "\"");
    }
    std::size_t n0 = std::stoul(item.substr(colon + 1));
    cells.emplace_back(*kind, n0);
  }
  return cells;
}

std::vector<std::pair<ProtocolKind, std::size_t>> default_bench_matrix() {
  std::vector<std::pair<ProtocolKind, std::size_t>> cells;
  for (auto k : {ProtocolKind::clique, ProtocolKind::wedge,
                 ProtocolKind::batched_triangle, ProtocolKind::batched_clique}) {
    for (std::size_t n0 : {10, 20, 40}) cells.emplace_back(k, n0);
  }
  return cells;
}

int cmd_bench(const BenchOptions& opt, std::ostream& out, std::ostream& err) {
  using Clock = std::chrono::steady_clock;
  struct Row {
    ProtocolKind proto;
    std::size_t n0;
    std::size_t rounds;
    double seconds;
    double oracle_seconds;
  };
  std::vector<Row> rows;
  const SimParams params;
  for (const auto& [kind, n0] : opt.matrix) {
    Row row{kind, n0, 0, 0.0, 0.0};
    for (std::size_t i = 0; i < opt.seeds; ++i) {
      Scenario sc;
      try {
        sc = gen_scenario(GenParams::for_protocol(kind, i + 1, n0, opt.rounds,
                                                  opt.density, params.c));
      } catch (const GenerationError& e) {
        err << "error: " << e.what() << "\n";
        return kExitInput;
      }
      NetworkState net = init_network(sc.g0, make_protocol(kind, params.c),
                                      params);
      for (const auto& r : sc.rounds) {
        auto t0 = Clock::now();
        RoundReport rep = run_round(net, r);
        auto t1 = Clock::now();
        check_round(rep, net.truth, kind, params);
        auto t2 = Clock::now();
        row.seconds += std::chrono::duration<double>(t2 - t0).count();
        row.oracle_seconds += std::chrono::duration<double>(t2 - t1).count();
        ++row.rounds;
      }
    }
    rows.push_back(row);
  }

  if (opt.json) {
    json j = json::array();
    for (const auto& r : rows) {
      j.push_back({{"protocol", to_string(r.proto)},
                   {"n0", r.n0},
                   {"rounds", r.rounds},
                   {"rounds_per_second",
                    r.seconds > 0 ? r.rounds / r.seconds : 0.0},
                   {"oracle_share",
                    r.seconds > 0 ? r.oracle_seconds / r.seconds : 0.0}});
    }
    out << j.dump(2) << "\n";
    return kExitPass;
  }
  out << std::left << std::setw(18) << "protocol" << std::right
      << std::setw(6) << "n0" << std::setw(9) << "rounds" << std::setw(14)
      << "rounds/s" << std::setw(14) << "oracle share" << "\n";
  for (const auto& r : rows) {
    out << std::left << std::setw(18) << to_string(r.proto) << std::right
        << std::setw(6) << r.n0 << std::setw(9) << r.rounds << std::setw(14)
        << std::fixed << std::setprecision(1)
        << (r.seconds > 0 ? r.rounds / r.seconds : 0.0) << std::setw(13)
        << std::setprecision(1)
        << (r.seconds > 0 ? 100.0 * r.oracle_seconds / r.seconds : 0.0)
        << "%\n";
  }
  return kExitPass;
}

// ---------------------------------------------------------------------------
// corpus

int cmd_corpus(const CorpusOptions& opt, std::ostream& out, std::ostream& err) {
  namespace fs = std::filesystem;
  if (!opt.out_dir.empty()) fs::create_directories(opt.out_dir);
  json results = json::array();
  bool all = true;
  for (const NamedScenario& ns : adversarial_corpus()) {
    std::string failure;
    Trace trace;
    try {
      trace = run_scenario(ns.scenario.g0, ns.scenario.rounds, ns.protocol,
                           ns.params);
      for (const auto& r : trace.rounds) {
        if (!r.verdict.passed()) {
          failure = describe_failure(r);
          break;
        }
      }
    } catch (const ScenarioError& e) {
      failure = e.what();
    }
    all = all && failure.empty();
    if (!opt.out_dir.empty()) {
      ScenarioFile f{ns.protocol, ns.params, ns.scenario};
      write_text_file((fs::path(opt.out_dir) / (ns.name + ".scenario.json")).string(),
                      serialize_scenario(f));
      if (!trace.rounds.empty()) {
        write_text_file((fs::path(opt.out_dir) / (ns.name + ".trace.json")).string(),
                        serialize_trace(trace));
      }
    }
    if (opt.json) {
      results.push_back({{"name", ns.name},
                         {"protocol", to_string(ns.protocol)},
                         {"passed", failure.empty()},
                         {"failure", failure}});
    } else {
      out << (failure.empty() ? "PASS " : "FAIL ") << ns.name << " ("
          << to_string(ns.protocol) << ")";
      if (!failure.empty()) out << ": " << failure;
      out << "\n";
    }
  }
  if (opt.json) out << results.dump(2) << "\n";
  if (!all) err << "adversarial corpus: failures present\n";
  return all ? kExitPass : kExitVerdict;
}

// ---------------------------------------------------------------------------
// gen

int cmd_gen(const GenOptions& opt, std::ostream& out, std::ostream& err) {
  ScenarioFile f;
  f.protocol = opt.proto;
  f.params = opt.params.apply(SimParams{});
  if (!valid_params(f.params, err)) return kExitInput;
  try {
    f.scenario = gen_scenario(GenParams::for_protocol(
        opt.proto, opt.seed, opt.n0, opt.rounds, opt.density, f.params.c));
  } catch (const GenerationError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  }
  const std::string text = serialize_scenario(f);
  if (opt.out.empty()) {
    out << text;
  } else {
    write_text_file(opt.out, text);
  }
  return kExitPass;
}

}  // namespace dynlist::cli
