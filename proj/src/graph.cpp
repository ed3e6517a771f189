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

#include "dynlist/graph.hpp"

#include <sstream>
#include <tuple>

namespace dynlist {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

std::string join_ids(const NodeSet& s) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (NodeId v : s) {
    if (!first) os << ',';
    os << v;
    first = false;
  }
  os << '}';
  return os.str();
}

}  // namespace

std::string to_string(const Triangle& t) {
  std::ostringstream os;
  os << '{' << t.ids[0] << ',' << t.ids[1] << ',' << t.ids[2] << '}';
  return os.str();
}

std::string to_string(const Wedge& w) {
  std::ostringstream os;
  os << '(' << w.center << ",{" << w.lo << ',' << w.hi << "})";
  return os.str();
}

std::string to_string(const Clique& c) {
  return join_ids(NodeSet(c.begin(), c.end()));
}

// ---------------------------------------------------------------------------
// Graph

Graph Graph::from_edges(const std::vector<NodeId>& nodes,
                        const std::vector<Edge>& edges) {
  Graph g;
  for (NodeId v : nodes) g.add_node(v);
  for (const auto& [u, v] : edges) {
    g.add_node(u);
    g.add_node(v);
    g.add_edge(u, v);
  }
  return g;
}

Graph Graph::complete(NodeId first, std::size_t n) {
  Graph g;
  for (std::size_t i = 0; i < n; ++i) g.add_node(first + i);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) g.add_edge(first + i, first + j);
  return g;
}

Graph Graph::path(NodeId first, std::size_t n) {
  Graph g;
  for (std::size_t i = 0; i < n; ++i) g.add_node(first + i);
  for (std::size_t i = 0; i + 1 < n; ++i) g.add_edge(first + i, first + i + 1);
  return g;
}

bool Graph::has_edge(NodeId u, NodeId v) const {
  auto it = adj_.find(u);
  return it != adj_.end() && it->second.contains(v);
}

const NodeSet& Graph::neighbors(NodeId v) const {
  auto it = adj_.find(v);
  if (it == adj_.end()) {
    throw std::out_of_range("unknown node " + std::to_string(v));
  }
  return it->second;
}

std::size_t Graph::num_edges() const {
  std::size_t twice = 0;
  for (const auto& [v, nbrs] : adj_) twice += nbrs.size();
  return twice / 2;
}

std::vector<NodeId> Graph::node_ids() const {
  std::vector<NodeId> out;
  out.reserve(adj_.size());
  for (const auto& [v, nbrs] : adj_) out.push_back(v);
  return out;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (const auto& [v, nbrs] : adj_)
    for (NodeId w : nbrs)
      if (v < w) out.emplace_back(v, w);
  return out;
}

void Graph::add_node(NodeId v) { adj_.try_emplace(v); }

void Graph::remove_node(NodeId v) {
  auto it = adj_.find(v);
  if (it == adj_.end()) return;
  for (NodeId w : it->second) adj_[w].erase(v);
  adj_.erase(it);
}

void Graph::add_edge(NodeId u, NodeId v) {
  if (u == v) throw std::invalid_argument("self-loop on " + std::to_string(u));
  if (!has_node(u) || !has_node(v)) {
    throw std::out_of_range("edge endpoint missing");
  }
  adj_[u].insert(v);
  adj_[v].insert(u);
}

void Graph::remove_edge(NodeId u, NodeId v) {
  if (auto it = adj_.find(u); it != adj_.end()) it->second.erase(v);
  if (auto it = adj_.find(v); it != adj_.end()) it->second.erase(u);
}

std::optional<std::string> Graph::check_invariants() const {
  for (const auto& [v, nbrs] : adj_) {
    if (nbrs.contains(v)) return "self-loop at " + std::to_string(v);
    for (NodeId w : nbrs) {
      auto it = adj_.find(w);
      if (it == adj_.end()) {
        return "neighbor " + std::to_string(w) + " of " + std::to_string(v) +
               " is not a node";
      }
      if (!it->second.contains(v)) {
        return "asymmetric edge " + std::to_string(v) + "-" +
               std::to_string(w);
      }
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Updates

UpdateKind kind_of(const Update& u) {
  return static_cast<UpdateKind>(u.index());
}

std::string to_string(UpdateKind k) {
  switch (k) {
    case UpdateKind::insert_node: return "insert_node";
    case UpdateKind::delete_node: return "delete_node";
    case UpdateKind::insert_edge: return "insert_edge";
    case UpdateKind::delete_edge: return "delete_edge";
  }
  return "?";
}

std::string to_string(const Update& u) {
  return std::visit(
      Overloaded{
          [](const InsertNode& x) {
            return "InsertNode(" + std::to_string(x.v) + "," +
                   join_ids(x.nbrs) + ")";
          },
          [](const DeleteNode& x) {
            return "DeleteNode(" + std::to_string(x.v) + ")";
          },
          [](const InsertEdge& x) {
            return "InsertEdge(" + std::to_string(x.u) + "," +
                   std::to_string(x.v) + ")";
          },
          [](const DeleteEdge& x) {
            return "DeleteEdge(" + std::to_string(x.u) + "," +
                   std::to_string(x.v) + ")";
          },
      },
      u);
}

bool update_less(const Update& a, const Update& b) {
  auto key = [](const Update& u) {
    return std::visit(
        Overloaded{
            [](const InsertNode& x) {
              return std::tuple(0, x.v, NodeId{0}, x.nbrs);
            },
            [](const DeleteNode& x) {
              return std::tuple(1, x.v, NodeId{0}, NodeSet{});
            },
            [](const InsertEdge& x) {
              auto e = make_edge(x.u, x.v);
              return std::tuple(2, e.first, e.second, NodeSet{});
            },
            [](const DeleteEdge& x) {
              auto e = make_edge(x.u, x.v);
              return std::tuple(3, e.first, e.second, NodeSet{});
            },
        },
        u);
  };
  return key(a) < key(b);
}

LegalityProfile LegalityProfile::single(std::initializer_list<UpdateKind> kinds) {
  LegalityProfile p;
  for (UpdateKind k : kinds) p.allowed_mask |= 1U << static_cast<unsigned>(k);
  p.batched = false;
  return p;
}

LegalityProfile LegalityProfile::batch(std::initializer_list<UpdateKind> kinds,
                                       std::size_t c) {
  LegalityProfile p = single(kinds);
  p.batched = true;
  p.c = c;
  return p;
}

// ---------------------------------------------------------------------------
// Validation

std::string to_string(Rule r) {
  switch (r) {
    case Rule::variant_not_allowed: return "variant not allowed";
    case Rule::too_many_updates: return "too many updates";
    case Rule::node_exists: return "node exists";
    case Rule::node_missing: return "node missing";
    case Rule::self_loop: return "self-loop";
    case Rule::edge_exists: return "edge exists";
    case Rule::edge_missing: return "edge missing";
    case Rule::duplicate_edge: return "duplicate edge reference";
    case Rule::node_conflict: return "node conflict";
    case Rule::incidence_bound: return "incidence bound";
  }
  return "?";
}

bool ValidationResult::has(Rule r) const {
  for (const auto& v : violations)
    if (v.rule == r) return true;
  return false;
}

std::string ValidationResult::describe() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& v : violations) {
    if (!first) os << "; ";
    first = false;
    if (v.update_index != Violation::kRoundLevel) {
      os << "update #" << v.update_index << ": ";
    }
    os << to_string(v.rule);
    if (!v.detail.empty()) os << " (" << v.detail << ")";
  }
  return os.str();
}

InvalidRound::InvalidRound(ValidationResult result)
    : std::runtime_error("invalid round: " + result.describe()),
      result_(std::move(result)) {}

ValidationResult validate_round(const Graph& g, const RoundUpdates& r) {
  ValidationResult res;
  auto fail = [&](std::size_t i, Rule rule, std::string detail) {
    res.violations.push_back(Violation{i, rule, std::move(detail)});
  };
  const auto& ups = r.updates;

  if (!r.profile.batched && ups.size() > 1) {
    fail(Violation::kRoundLevel, Rule::too_many_updates,
         std::to_string(ups.size()) + " updates in a single-update round");
  }

  // First pass: which nodes this round inserts and deletes.
  std::map<NodeId, std::size_t> inserted;
  std::map<NodeId, std::size_t> deleted;
  for (std::size_t i = 0; i < ups.size(); ++i) {
    if (!r.profile.allows(kind_of(ups[i]))) {
      fail(i, Rule::variant_not_allowed, to_string(kind_of(ups[i])));
    }
    if (const auto* x = std::get_if<InsertNode>(&ups[i])) {
      if (!inserted.emplace(x->v, i).second) {
        fail(i, Rule::node_conflict,
             "node " + std::to_string(x->v) + " inserted twice");
      }
    } else if (const auto* x = std::get_if<DeleteNode>(&ups[i])) {
      if (!deleted.emplace(x->v, i).second) {
        fail(i, Rule::node_conflict,
             "node " + std::to_string(x->v) + " deleted twice");
      }
    }
  }
  for (const auto& [v, i] : inserted) {
    if (deleted.contains(v)) {
      fail(i, Rule::node_conflict,
           "node " + std::to_string(v) + " both inserted and deleted");
    }
  }

  std::map<Edge, std::size_t> edge_refs;
  std::map<NodeId, std::size_t> incidence;
  auto reference_edge = [&](std::size_t i, NodeId a, NodeId b) {
    auto [it, fresh] = edge_refs.emplace(make_edge(a, b), i);
    if (!fresh) {
      fail(i, Rule::duplicate_edge,
           "edge {" + std::to_string(it->first.first) + "," +
               std::to_string(it->first.second) + "} also in update #" +
               std::to_string(it->second));
    }
    ++incidence[a];
    ++incidence[b];
  };
  auto touches_deleted = [&](std::size_t i, NodeId a) {
    if (deleted.contains(a)) {
      fail(i, Rule::node_conflict,
           "edge touches node " + std::to_string(a) + " deleted this round");
    }
  };

  for (std::size_t i = 0; i < ups.size(); ++i) {
    std::visit(
        Overloaded{
            [&](const InsertNode& x) {
              if (g.has_node(x.v)) {
                fail(i, Rule::node_exists, std::to_string(x.v));
              }
              for (NodeId w : x.nbrs) {
                if (w == x.v) {
                  fail(i, Rule::self_loop, std::to_string(w));
                  continue;
                }
                if (!g.has_node(w) && !inserted.contains(w)) {
                  fail(i, Rule::node_missing, std::to_string(w));
                }
                touches_deleted(i, w);
                reference_edge(i, x.v, w);
              }
            },
            [&](const DeleteNode& x) {
              if (!g.has_node(x.v)) {
                fail(i, Rule::node_missing, std::to_string(x.v));
                return;
              }
              // The deleted node itself is silent afterwards; only
              // surviving neighbors accrue incidence.
              for (NodeId w : g.neighbors(x.v)) {
                if (!deleted.contains(w)) ++incidence[w];
              }
            },
            [&](const InsertEdge& x) {
              if (x.u == x.v) {
                fail(i, Rule::self_loop, std::to_string(x.u));
                return;
              }
              bool present = true;
              for (NodeId a : {x.u, x.v}) {
                if (!g.has_node(a)) {
                  fail(i, Rule::node_missing, std::to_string(a));
                  present = false;
                }
              }
              if (present && g.has_edge(x.u, x.v)) {
                fail(i, Rule::edge_exists,
                     std::to_string(x.u) + "-" + std::to_string(x.v));
              }
              touches_deleted(i, x.u);
              touches_deleted(i, x.v);
              reference_edge(i, x.u, x.v);
            },
            [&](const DeleteEdge& x) {
              if (!g.has_edge(x.u, x.v)) {
                fail(i, Rule::edge_missing,
                     std::to_string(x.u) + "-" + std::to_string(x.v));
              }
              touches_deleted(i, x.u);
              touches_deleted(i, x.v);
              reference_edge(i, x.u, x.v);
            },
        },
        ups[i]);
  }

  if (r.profile.batched) {
    for (const auto& [v, count] : incidence) {
      if (deleted.contains(v)) continue;
      if (count > r.profile.c) {
        fail(Violation::kRoundLevel, Rule::incidence_bound,
             "node " + std::to_string(v) + " has " + std::to_string(count) +
                 " incident updates, bound " + std::to_string(r.profile.c));
      }
    }
  }
  return res;
}

Graph apply_round(const Graph& g, const RoundUpdates& r) {
  if (auto res = validate_round(g, r); !res.ok()) {
    throw InvalidRound(std::move(res));
  }
  Graph out = g;
  for (const auto& u : r.updates) {
    if (const auto* x = std::get_if<DeleteEdge>(&u)) out.remove_edge(x->u, x->v);
    if (const auto* x = std::get_if<DeleteNode>(&u)) out.remove_node(x->v);
  }
  for (const auto& u : r.updates) {
    if (const auto* x = std::get_if<InsertNode>(&u)) out.add_node(x->v);
  }
  for (const auto& u : r.updates) {
    if (const auto* x = std::get_if<InsertNode>(&u)) {
      for (NodeId w : x->nbrs) out.add_edge(x->v, w);
    }
    if (const auto* x = std::get_if<InsertEdge>(&u)) out.add_edge(x->u, x->v);
  }
  return out;
}

AdjacencyDiff diff_adjacency(const Graph& before, const Graph& after,
                             NodeId v) {
  AdjacencyDiff d;
  static const NodeSet kEmpty;
  const NodeSet& now = after.has_node(v) ? after.neighbors(v) : kEmpty;
  const NodeSet& was = before.has_node(v) ? before.neighbors(v) : kEmpty;
  std::set_difference(now.begin(), now.end(), was.begin(), was.end(),
                      std::inserter(d.added, d.added.end()));
  std::set_difference(was.begin(), was.end(), now.begin(), now.end(),
                      std::inserter(d.removed, d.removed.end()));
  return d;
}

}  // namespace dynlist
