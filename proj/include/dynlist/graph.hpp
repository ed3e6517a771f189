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

// Ground-truth dynamic graph, the update vocabulary, and per-round
// validation against legality profiles.

#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "dynlist/types.hpp"

namespace dynlist {

using Edge = std::pair<NodeId, NodeId>;  // always (min, max)

inline Edge make_edge(NodeId a, NodeId b) {
  return a < b ? Edge{a, b} : Edge{b, a};
}

// Undirected simple graph. Node set is the key set of the adjacency map.
class Graph {
 public:
  Graph() = default;

  static Graph from_edges(const std::vector<NodeId>& nodes,
                          const std::vector<Edge>& edges);
  static Graph complete(NodeId first, std::size_t n);
  static Graph path(NodeId first, std::size_t n);

  bool has_node(NodeId v) const { return adj_.contains(v); }
  bool has_edge(NodeId u, NodeId v) const;

  // Throws std::out_of_range for an unknown node.
  const NodeSet& neighbors(NodeId v) const;

  std::size_t num_nodes() const { return adj_.size(); }
  std::size_t num_edges() const;
  bool empty() const { return adj_.empty(); }

  std::vector<NodeId> node_ids() const;
  std::vector<Edge> edges() const;  // sorted
  const std::map<NodeId, NodeSet>& adjacency() const { return adj_; }

  void add_node(NodeId v);
  void remove_node(NodeId v);  // also drops incident edges
  void add_edge(NodeId u, NodeId v);
  void remove_edge(NodeId u, NodeId v);

  // Symmetry, no self-loops, and every neighbor is a node. Returns a
  // description of the first broken invariant.
  std::optional<std::string> check_invariants() const;

  bool operator==(const Graph&) const = default;

 private:
  std::map<NodeId, NodeSet> adj_;
};

struct InsertNode {
  NodeId v = 0;
  NodeSet nbrs;
  bool operator==(const InsertNode&) const = default;
};
struct DeleteNode {
  NodeId v = 0;
  bool operator==(const DeleteNode&) const = default;
};
struct InsertEdge {
  NodeId u = 0;
  NodeId v = 0;
  bool operator==(const InsertEdge&) const = default;
};
struct DeleteEdge {
  NodeId u = 0;
  NodeId v = 0;
  bool operator==(const DeleteEdge&) const = default;
};

using Update = std::variant<InsertNode, DeleteNode, InsertEdge, DeleteEdge>;

enum class UpdateKind : std::uint8_t {
  insert_node = 0,
  delete_node = 1,
  insert_edge = 2,
  delete_edge = 3,
};

UpdateKind kind_of(const Update& u);
std::string to_string(UpdateKind k);
std::string to_string(const Update& u);

// Total order used for canonical serialization of a round.
bool update_less(const Update& a, const Update& b);

// Which update variants a protocol tolerates, and how many per round.
struct LegalityProfile {
  std::uint8_t allowed_mask = 0;
  bool batched = false;
  std::size_t c = 4;  // incidence bound, batched profiles only

  bool allows(UpdateKind k) const {
    return (allowed_mask >> static_cast<unsigned>(k)) & 1U;
  }

  static LegalityProfile single(std::initializer_list<UpdateKind> kinds);
  static LegalityProfile batch(std::initializer_list<UpdateKind> kinds,
                               std::size_t c);

  bool operator==(const LegalityProfile&) const = default;
};

struct RoundUpdates {
  std::vector<Update> updates;
  LegalityProfile profile;
};

enum class Rule {
  variant_not_allowed,
  too_many_updates,
  node_exists,
  node_missing,
  self_loop,
  edge_exists,
  edge_missing,
  duplicate_edge,
  node_conflict,
  incidence_bound,
};

std::string to_string(Rule r);

struct Violation {
  static constexpr std::size_t kRoundLevel = static_cast<std::size_t>(-1);

  std::size_t update_index = kRoundLevel;
  Rule rule = Rule::variant_not_allowed;
  std::string detail;
};

struct ValidationResult {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
  bool has(Rule r) const;
  std::string describe() const;
};

class InvalidRound : public std::runtime_error {
 public:
  explicit InvalidRound(ValidationResult result);
  const ValidationResult& result() const { return result_; }

 private:
  ValidationResult result_;
};

ValidationResult validate_round(const Graph& g, const RoundUpdates& r);

// Applies every update of a valid round as one set. Throws InvalidRound.
Graph apply_round(const Graph& g, const RoundUpdates& r);

// Neighbors gained and lost by `v`. A node absent from `before` has
// added = N_after(v).
struct AdjacencyDiff {
  NodeSet added;
  NodeSet removed;

  bool empty() const { return added.empty() && removed.empty(); }
  bool operator==(const AdjacencyDiff&) const = default;
};

AdjacencyDiff diff_adjacency(const Graph& before, const Graph& after,
                             NodeId v);

}  // namespace dynlist
