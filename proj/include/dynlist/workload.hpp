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

// Seeded scenario generation and the curated adversarial corpus.

#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "dynlist/graph.hpp"
#include "dynlist/protocols.hpp"
#include "dynlist/report.hpp"

namespace dynlist {

// mt19937_64 has a fixed output sequence in every conforming standard
// library; the std distributions do not, so bounded draws are done here.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  // Uniform in [0, n). n must be positive.
  std::uint64_t below(std::uint64_t n);
  // Uniform in [0, 1) with 53 bits.
  double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
  bool chance(double p) { return unit() < p; }

  template <class T>
  const T& pick(const std::vector<T>& v) {
    return v[below(v.size())];
  }

 private:
  std::mt19937_64 engine_;
};

struct GenParams {
  std::uint64_t seed = 1;
  std::size_t n0 = 10;
  std::size_t rounds = 20;
  double density = 0.3;
  LegalityProfile profile;
  std::size_t c = 4;
  // Indexed by UpdateKind. Entries for variants outside the profile are
  // ignored.
  std::array<double, 4> op_mix{0.35, 0.15, 0.35, 0.35};
  // Batched profiles: upper bound on updates per round (0 = 3 * n0).
  std::size_t max_batch = 0;
  // Nodes below which deletions are not drawn.
  std::size_t min_nodes = 3;
  std::size_t retry_budget = 200;

  static GenParams for_protocol(ProtocolKind k, std::uint64_t seed,
                                std::size_t n0, std::size_t rounds,
                                double density, std::size_t c = 4);
};

class GenerationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Scenario {
  Graph g0;
  std::vector<RoundUpdates> rounds;
};

// Pure function of `p`. Every emitted round passes validate_round.
Scenario gen_scenario(const GenParams& p);

// Incrementally assembles a conflict-free round, rejecting any update that
// would make the round invalid for `profile`.
class RoundBuilder {
 public:
  RoundBuilder(const Graph& g, const LegalityProfile& profile)
      : g_(g), profile_(profile) {}

  bool try_add(const Update& u);

  const std::vector<Update>& updates() const { return updates_; }
  bool deleted(NodeId v) const { return deleted_.contains(v); }
  bool inserted(NodeId v) const { return inserted_.contains(v); }
  std::size_t incidence(NodeId v) const;
  RoundUpdates take() &&;

 private:
  bool edge_free(NodeId a, NodeId b) const;
  bool room(NodeId v, std::size_t extra) const;
  void reference(NodeId a, NodeId b);

  const Graph& g_;
  LegalityProfile profile_;
  std::vector<Update> updates_;
  NodeSet inserted_;
  NodeSet deleted_;
  std::set<Edge> edge_refs_;
  std::map<NodeId, std::size_t> touched_;  // edge references per node
  std::map<NodeId, std::size_t> incidence_;
};

struct NamedScenario {
  std::string name;
  std::string description;
  ProtocolKind protocol = ProtocolKind::clique;
  SimParams params;
  Scenario scenario;
};

// Hand-built scenarios aimed at the delicate cases of each protocol.
std::vector<NamedScenario> adversarial_corpus();

}  // namespace dynlist
