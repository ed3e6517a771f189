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

#include "dynlist/protocols.hpp"

#include <map>
#include <vector>

namespace dynlist {

std::string to_string(ProtocolKind k) {
  switch (k) {
    case ProtocolKind::clique: return "clique";
    case ProtocolKind::wedge: return "wedge";
    case ProtocolKind::batched_triangle: return "batched_triangle";
    case ProtocolKind::batched_clique: return "batched_clique";
  }
  return "?";
}

std::optional<ProtocolKind> parse_protocol_kind(std::string_view name) {
  for (auto k : {ProtocolKind::clique, ProtocolKind::wedge,
                 ProtocolKind::batched_triangle,
                 ProtocolKind::batched_clique}) {
    if (to_string(k) == name) return k;
  }
  return std::nullopt;
}

LegalityProfile profile_for(ProtocolKind k, std::size_t c) {
  using K = UpdateKind;
  switch (k) {
    case ProtocolKind::clique:
      return LegalityProfile::single(
          {K::insert_node, K::delete_node, K::delete_edge});
    case ProtocolKind::wedge:
      return LegalityProfile::single(
          {K::insert_edge, K::delete_edge, K::delete_node});
    case ProtocolKind::batched_triangle:
      return LegalityProfile::batch(
          {K::insert_node, K::delete_node, K::insert_edge, K::delete_edge}, c);
    case ProtocolKind::batched_clique:
      return LegalityProfile::batch(
          {K::insert_node, K::delete_node, K::delete_edge}, c);
  }
  throw std::invalid_argument("unknown protocol");
}

// ---------------------------------------------------------------------------
// Initial knowledge

NodeState initial_listings(const Graph& g0, NodeId v, ProtocolKind proto) {
  NodeState st;
  st.self_id = v;
  st.nbrs = g0.neighbors(v);
  for (auto a = st.nbrs.begin(); a != st.nbrs.end(); ++a) {
    for (auto b = std::next(a); b != st.nbrs.end(); ++b) {
      if (g0.has_edge(*a, *b)) {
        st.tri.insert(make_triangle(v, *a, *b));
      } else if (proto == ProtocolKind::wedge) {
        st.wedges.insert(make_wedge(v, *a, *b));
      }
    }
  }
  if (proto == ProtocolKind::wedge) {
    // v as an endpoint: v - x - y with y not adjacent to v.
    for (NodeId x : st.nbrs) {
      for (NodeId y : g0.neighbors(x)) {
        if (y != v && !st.nbrs.contains(y)) {
          st.wedges.insert(make_wedge(x, v, y));
        }
      }
    }
  }
  return st;
}

// ---------------------------------------------------------------------------
// Clique derivation

namespace {

// Extends `current` with candidates that follow its last vertex, emitting
// every clique of exactly `size` vertices. Candidates stay sorted.
void extend_clique(const std::map<NodeId, NodeSet>& local,
                   std::vector<NodeId>& current,
                   const std::vector<NodeId>& candidates, std::size_t size,
                   NodeId self, CliqueSet& out) {
  if (current.size() == size) {
    Clique c = current;
    c.push_back(self);
    std::sort(c.begin(), c.end());
    out.insert(std::move(c));
    return;
  }
  const std::size_t need = size - current.size();
  for (std::size_t i = 0; i + need <= candidates.size(); ++i) {
    NodeId x = candidates[i];
    const NodeSet& nx = local.at(x);
    std::vector<NodeId> next;
    for (std::size_t j = i + 1; j < candidates.size(); ++j) {
      if (nx.contains(candidates[j])) next.push_back(candidates[j]);
    }
    if (next.size() + 1 < need) continue;
    current.push_back(x);
    extend_clique(local, current, next, size, self, out);
    current.pop_back();
  }
}

}  // namespace

CliqueSet derive_cliques(const NodeState& st, CliqueParams p) {
  if (p.s < 3) throw std::invalid_argument("clique size must be at least 3");
  // Local knowledge graph: vertices are neighbors, edges are pairs that
  // close a listed triangle with self.
  std::map<NodeId, NodeSet> local;
  for (NodeId v : st.nbrs) local.try_emplace(v);
  for (const Triangle& t : st.tri) {
    if (!t.contains(st.self_id)) continue;
    NodeId a = 0;
    NodeId b = 0;
    int k = 0;
    for (NodeId x : t.ids) {
      if (x == st.self_id) continue;
      (k++ == 0 ? a : b) = x;
    }
    if (!st.nbrs.contains(a) || !st.nbrs.contains(b)) continue;
    local[a].insert(b);
    local[b].insert(a);
  }
  std::vector<NodeId> candidates;
  for (const auto& [v, adj] : local) {
    if (adj.size() + 1 >= static_cast<std::size_t>(p.s - 1)) {
      candidates.push_back(v);
    }
  }
  CliqueSet out;
  std::vector<NodeId> current;
  extend_clique(local, current, candidates, static_cast<std::size_t>(p.s - 1),
                st.self_id, out);
  return out;
}

// ---------------------------------------------------------------------------
// Constant-bandwidth clique protocol

namespace {

void require_single_update(const AdjacencyDiff& diff, const char* who) {
  // A node inserted this round gains all of its neighbors at once; any
  // other node sees at most one change.
  if (diff.removed.size() > 1 ||
      (!diff.removed.empty() && !diff.added.empty())) {
    throw ProtocolError(std::string(who) +
                        ": diff is not produced by a single update");
  }
}

void erase_triangles_with(TriangleSet& tri, NodeId u) {
  std::erase_if(tri, [u](const Triangle& t) { return t.contains(u); });
}

}  // namespace

Outbox clique_emit(const NodeState& st, const AdjacencyDiff& diff) {
  require_single_update(diff, "clique_emit");
  Outbox out;
  if (!diff.added.empty()) {
    for (NodeId w : st.nbrs) out[w].plain_new = true;
  }
  if (!diff.removed.empty()) {
    NodeId lost = *diff.removed.begin();
    for (NodeId w : st.nbrs) {
      Message& m = out[w];
      m.plain_del = true;
      m.shared_del = st.tri.contains(make_triangle(st.self_id, lost, w));
    }
  }
  return out;
}

NodeState clique_absorb(NodeState st, const AdjacencyDiff& diff,
                        const Inbox& inbox) {
  require_single_update(diff, "clique_absorb");
  if (diff.added.size() == 1) {
    NodeId u = *diff.added.begin();
    for (const auto& [v, m] : inbox) {
      if (m.plain_new && v != u && st.nbrs.contains(v)) {
        st.tri.insert(make_triangle(u, v, st.self_id));
      }
    }
  }
  if (!diff.removed.empty()) {
    // A locally observed loss explains every DELETE received this round.
    erase_triangles_with(st.tri, *diff.removed.begin());
    return st;
  }
  NodeSet senders;
  NodeSet shared;
  for (const auto& [v, m] : inbox) {
    if (!m.plain_del) continue;
    senders.insert(v);
    if (m.shared_del) shared.insert(v);
  }
  if (senders.size() < 2 || shared.empty()) return st;
  std::erase_if(st.tri, [&](const Triangle& t) {
    NodeId a = 0;
    NodeId b = 0;
    int k = 0;
    for (NodeId x : t.ids) {
      if (x != st.self_id) (k++ == 0 ? a : b) = x;
    }
    return senders.contains(a) && senders.contains(b) &&
           (shared.contains(a) || shared.contains(b));
  });
  return st;
}

// ---------------------------------------------------------------------------
// Induced-wedge protocol

namespace {

void require_one_change(const AdjacencyDiff& diff, const char* who) {
  if (diff.added.size() + diff.removed.size() > 1) {
    throw ProtocolError(std::string(who) +
                        ": more than one adjacent change in a round");
  }
}

NodeId third_of(const Triangle& t, NodeId a, NodeId b) {
  for (NodeId x : t.ids)
    if (x != a && x != b) return x;
  return a;
}

}  // namespace

Outbox wedge_emit(const NodeState& st, const AdjacencyDiff& diff) {
  require_one_change(diff, "wedge_emit");
  Outbox out;
  if (diff.empty()) return out;
  for (NodeId w : st.nbrs) {
    Message& m = out[w];
    m.new_ids = diff.added;
    m.del_ids = diff.removed;
  }
  return out;
}

NodeState wedge_absorb(NodeState st, const AdjacencyDiff& diff,
                       const Inbox& inbox) {
  require_one_change(diff, "wedge_absorb");
  const NodeId self = st.self_id;

  if (!diff.added.empty()) {
    // Edge {self, u} closes every listed wedge self - x - u.
    NodeId u = *diff.added.begin();
    for (auto it = st.wedges.begin(); it != st.wedges.end();) {
      if (it->has_endpoint(self) && it->other_endpoint(self) == u) {
        st.tri.insert(make_triangle(self, it->center, u));
        it = st.wedges.erase(it);
      } else {
        ++it;
      }
    }
  }
  if (!diff.removed.empty()) {
    NodeId u = *diff.removed.begin();
    for (auto it = st.tri.begin(); it != st.tri.end();) {
      if (it->contains(u)) {
        st.wedges.insert(make_wedge(third_of(*it, self, u), self, u));
        it = st.tri.erase(it);
      } else {
        ++it;
      }
    }
    // Wedges that used the edge {self, u}.
    std::erase_if(st.wedges, [&](const Wedge& w) {
      return (w.center == self && w.has_endpoint(u)) ||
             (w.center == u && w.has_endpoint(self));
    });
  }

  for (const auto& [v, m] : inbox) {
    for (NodeId u : m.new_ids) {
      if (u == self) continue;
      if (!st.nbrs.contains(u)) st.wedges.insert(make_wedge(v, self, u));
      if (st.wedges.erase(make_wedge(self, v, u)) > 0) {
        st.tri.insert(make_triangle(v, self, u));
      }
    }
    for (NodeId u : m.del_ids) {
      if (u == self) continue;
      st.wedges.erase(make_wedge(v, self, u));
      if (st.tri.erase(make_triangle(self, v, u)) > 0) {
        st.wedges.insert(make_wedge(self, v, u));
      }
    }
  }
  return st;
}

// ---------------------------------------------------------------------------
// Batched triangle and clique protocols

Outbox batched_triangle_emit(const NodeState& st, const AdjacencyDiff& diff,
                             std::size_t c) {
  if (diff.added.size() + diff.removed.size() > c) {
    throw ProtocolError("batched_triangle_emit: " +
                        std::to_string(diff.added.size() + diff.removed.size()) +
                        " incident updates exceed bound " + std::to_string(c));
  }
  Outbox out;
  if (diff.empty()) return out;
  for (NodeId w : st.nbrs) {
    Message& m = out[w];
    m.new_ids = diff.added;
    m.del_ids = diff.removed;
  }
  return out;
}

NodeState batched_triangle_absorb(NodeState st, const AdjacencyDiff& diff,
                                  const Inbox& inbox) {
  const NodeId self = st.self_id;
  for (NodeId u : diff.removed) erase_triangles_with(st.tri, u);
  for (const auto& [v, m] : inbox) {
    for (NodeId u : m.del_ids) st.tri.erase(make_triangle(u, v, self));
  }
  for (const auto& [v, m] : inbox) {
    if (!st.nbrs.contains(v)) continue;
    for (NodeId u : m.new_ids) {
      if (u != self && st.nbrs.contains(u)) {
        st.tri.insert(make_triangle(u, v, self));
      }
    }
  }
  return st;
}

CliqueRoundResult batched_clique_round(NodeState st, const AdjacencyDiff& diff,
                                       const Inbox& inbox, CliqueParams p) {
  CliqueRoundResult r;
  r.state = batched_triangle_absorb(std::move(st), diff, inbox);
  r.cliques = derive_cliques(r.state, p);
  return r;
}

// ---------------------------------------------------------------------------
// Protocol adapters

namespace {

class CliqueProtocol final : public Protocol {
 public:
  ProtocolKind kind() const override { return ProtocolKind::clique; }
  Outbox emit(const NodeState& st, const AdjacencyDiff& d) const override {
    return clique_emit(st, d);
  }
  NodeState absorb(NodeState st, const AdjacencyDiff& d,
                   const Inbox& in) const override {
    return clique_absorb(std::move(st), d, in);
  }
};

class WedgeProtocol final : public Protocol {
 public:
  ProtocolKind kind() const override { return ProtocolKind::wedge; }
  Outbox emit(const NodeState& st, const AdjacencyDiff& d) const override {
    return wedge_emit(st, d);
  }
  NodeState absorb(NodeState st, const AdjacencyDiff& d,
                   const Inbox& in) const override {
    return wedge_absorb(std::move(st), d, in);
  }
};

// Cliques are derived from triangle state at report time, so both batched
// kinds share the same emit/absorb pair.
class BatchedProtocol final : public Protocol {
 public:
  BatchedProtocol(ProtocolKind k, std::size_t c) : kind_(k), c_(c) {}
  ProtocolKind kind() const override { return kind_; }
  Outbox emit(const NodeState& st, const AdjacencyDiff& d) const override {
    return batched_triangle_emit(st, d, c_);
  }
  NodeState absorb(NodeState st, const AdjacencyDiff& d,
                   const Inbox& in) const override {
    return batched_triangle_absorb(std::move(st), d, in);
  }

 private:
  ProtocolKind kind_;
  std::size_t c_;
};

}  // namespace

std::shared_ptr<const Protocol> make_protocol(ProtocolKind k, std::size_t c) {
  switch (k) {
    case ProtocolKind::clique: return std::make_shared<CliqueProtocol>();
    case ProtocolKind::wedge: return std::make_shared<WedgeProtocol>();
    case ProtocolKind::batched_triangle:
    case ProtocolKind::batched_clique:
      return std::make_shared<BatchedProtocol>(k, c);
  }
  throw std::invalid_argument("unknown protocol");
}

}  // namespace dynlist
