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

// Synchronous round driver. Each round has three phases:
//   1. the topology change is applied and every surviving node diffs its
//      adjacency; deleted nodes lose their state and stay silent,
//   2. surviving nodes emit; messages travel only over post-update links,
//      one merged message per ordered pair,
//   3. surviving nodes absorb their inbox and the listings are snapshotted.

#pragma once

#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "dynlist/graph.hpp"
#include "dynlist/protocols.hpp"
#include "dynlist/report.hpp"

namespace dynlist {

struct NetworkState {
  Graph truth;
  std::map<NodeId, NodeState> states;
  std::shared_ptr<const Protocol> protocol;
  SimParams params;
  std::size_t round = 0;

  LegalityProfile profile() const {
    return profile_for(protocol->kind(), params.c);
  }
};

// Every node starts from full knowledge of g0.
NetworkState init_network(const Graph& g0,
                          std::shared_ptr<const Protocol> protocol,
                          const SimParams& params);

// Listings of the current state, without verdict.
RoundReport snapshot(const NetworkState& net);

// Advances one round. The round is validated against the protocol's
// profile (r.profile is ignored). Throws InvalidRound or ProtocolError.
// The returned report carries an empty verdict; see check_round.
RoundReport run_round(NetworkState& net, const RoundUpdates& r);

class ScenarioError : public std::runtime_error {
 public:
  enum class Cause { invalid_input, protocol_failure };

  ScenarioError(std::size_t round, Cause cause, const std::string& what)
      : std::runtime_error("round " + std::to_string(round) + ": " + what),
        round_(round),
        cause_(cause) {}
  std::size_t round() const { return round_; }
  Cause cause() const { return cause_; }

 private:
  std::size_t round_;
  Cause cause_;
};

// Runs every round and fills each report's verdict. Throws ScenarioError
// naming the first failing round.
Trace run_scenario(const Graph& g0, const std::vector<RoundUpdates>& rounds,
                   std::shared_ptr<const Protocol> protocol,
                   const SimParams& params);
Trace run_scenario(const Graph& g0, const std::vector<RoundUpdates>& rounds,
                   ProtocolKind kind, const SimParams& params);

}  // namespace dynlist
