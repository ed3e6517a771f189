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

// Node-local listing protocols. Each protocol is a pair of pure functions:
// `emit` maps (state, adjacency diff) to an outbox, and `absorb` maps
// (state, diff, inbox) to the next state. The engine calls emit on every
// surviving node, delivers, then calls absorb.
//
//   clique            O(1) bits; node insertions, node/edge deletions,
//                     one update per round. Lists triangles, derives K_s.
//   wedge             one ID per message; edge insertions, node/edge
//                     deletions, one update per round. Lists induced
//                     wedges (and the triangles they close into).
//   batched_triangle  up to c IDs per message; every update kind, at most
//                     c updates incident to any node per round.
//   batched_clique    batched_triangle plus K_s derivation; no edge
//                     insertions.

#pragma once

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "dynlist/graph.hpp"
#include "dynlist/message.hpp"
#include "dynlist/types.hpp"

namespace dynlist {

enum class ProtocolKind { clique, wedge, batched_triangle, batched_clique };

std::string to_string(ProtocolKind k);
std::optional<ProtocolKind> parse_protocol_kind(std::string_view name);

// Update variants (and batching) each protocol is proven for.
LegalityProfile profile_for(ProtocolKind k, std::size_t c);

// Whether the protocol's output includes derived K_s listings.
inline bool derives_cliques(ProtocolKind k) {
  return k == ProtocolKind::clique || k == ProtocolKind::batched_clique;
}

class ProtocolError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct NodeState {
  NodeId self_id = 0;
  NodeSet nbrs;
  TriangleSet tri;
  WedgeSet wedges;

  bool operator==(const NodeState&) const = default;
};

struct CliqueParams {
  int s = 4;
};

// Full knowledge of the initial graph: every triangle through `v`, and for
// the wedge protocol every induced wedge containing `v` in any position.
NodeState initial_listings(const Graph& g0, NodeId v, ProtocolKind proto);

// Every K_s through st.self_id whose triangles through self are all listed.
// s = 3 returns exactly st.tri (as 3-vectors).
CliqueSet derive_cliques(const NodeState& st, CliqueParams p);

Outbox clique_emit(const NodeState& st, const AdjacencyDiff& diff);
NodeState clique_absorb(NodeState st, const AdjacencyDiff& diff,
                        const Inbox& inbox);

Outbox wedge_emit(const NodeState& st, const AdjacencyDiff& diff);
NodeState wedge_absorb(NodeState st, const AdjacencyDiff& diff,
                       const Inbox& inbox);

Outbox batched_triangle_emit(const NodeState& st, const AdjacencyDiff& diff,
                             std::size_t c);
NodeState batched_triangle_absorb(NodeState st, const AdjacencyDiff& diff,
                                  const Inbox& inbox);

struct CliqueRoundResult {
  NodeState state;
  CliqueSet cliques;
};
CliqueRoundResult batched_clique_round(NodeState st, const AdjacencyDiff& diff,
                                       const Inbox& inbox, CliqueParams p);

// Engine-facing view of one protocol. The built-in implementations forward
// to the free functions above; tests substitute faulty ones.
class Protocol {
 public:
  virtual ~Protocol() = default;

  virtual ProtocolKind kind() const = 0;
  virtual NodeState initial_state(const Graph& g0, NodeId v) const {
    return initial_listings(g0, v, kind());
  }
  virtual Outbox emit(const NodeState& st, const AdjacencyDiff& diff) const = 0;
  virtual NodeState absorb(NodeState st, const AdjacencyDiff& diff,
                           const Inbox& inbox) const = 0;
};

std::shared_ptr<const Protocol> make_protocol(ProtocolKind k, std::size_t c);

}  // namespace dynlist
