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

#include "dynlist/workload.hpp"

#include <optional>

namespace dynlist {

std::uint64_t Rng::below(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("Rng::below(0)");
  const std::uint64_t threshold = (0 - n) % n;
  for (;;) {
    std::uint64_t x = next();
    if (x >= threshold) return x % n;
  }
}

GenParams GenParams::for_protocol(ProtocolKind k, std::uint64_t seed,
                                  std::size_t n0, std::size_t rounds,
                                  double density, std::size_t c) {
  GenParams p;
  p.seed = seed;
  p.n0 = n0;
  p.rounds = rounds;
  p.density = density;
  p.c = c;
  p.profile = profile_for(k, c);
  if (!p.profile.allows(UpdateKind::insert_node) && rounds > 0) {
    // Deletions cannot be undone here. Scale their weight so that a run
    // removes about half of the initial nodes instead of collapsing to
    // min_nodes in the first few dozen rounds.
    const double others = p.op_mix[2] + p.op_mix[3];
    const double target = static_cast<double>(n0) / 2.0;
    const double r = static_cast<double>(rounds);
    p.op_mix[1] = target < r ? others * target / (r - target) : p.op_mix[1];
  }
  return p;
}

// ---------------------------------------------------------------------------
// RoundBuilder

std::size_t RoundBuilder::incidence(NodeId v) const {
  auto it = incidence_.find(v);
  return it == incidence_.end() ? 0 : it->second;
}

bool RoundBuilder::edge_free(NodeId a, NodeId b) const {
  return !edge_refs_.contains(make_edge(a, b));
}

bool RoundBuilder::room(NodeId v, std::size_t extra) const {
  return !profile_.batched || incidence(v) + extra <= profile_.c;
}

void RoundBuilder::reference(NodeId a, NodeId b) {
  edge_refs_.insert(make_edge(a, b));
  ++touched_[a];
  ++touched_[b];
  ++incidence_[a];
  ++incidence_[b];
}

bool RoundBuilder::try_add(const Update& u) {
  if (!profile_.allows(kind_of(u))) return false;
  if (!profile_.batched && !updates_.empty()) return false;

  auto live = [&](NodeId w) { return g_.has_node(w) && !deleted_.contains(w); };

  if (const auto* x = std::get_if<InsertNode>(&u)) {
    if (g_.has_node(x->v) || inserted_.contains(x->v)) return false;
    if (!room(x->v, x->nbrs.size())) return false;
    for (NodeId w : x->nbrs) {
      if (w == x->v || !(live(w) || inserted_.contains(w))) return false;
      if (!edge_free(x->v, w) || !room(w, 1)) return false;
    }
    inserted_.insert(x->v);
    for (NodeId w : x->nbrs) reference(x->v, w);
  } else if (const auto* x = std::get_if<DeleteNode>(&u)) {
    if (!live(x->v) || touched_.contains(x->v)) return false;
    for (NodeId w : g_.neighbors(x->v)) {
      if (!deleted_.contains(w) && !room(w, 1)) return false;
    }
    deleted_.insert(x->v);
    for (NodeId w : g_.neighbors(x->v)) {
      if (!deleted_.contains(w)) ++incidence_[w];
    }
  } else if (const auto* x = std::get_if<InsertEdge>(&u)) {
    if (x->u == x->v || !live(x->u) || !live(x->v)) return false;
    if (g_.has_edge(x->u, x->v) || !edge_free(x->u, x->v)) return false;
    if (!room(x->u, 1) || !room(x->v, 1)) return false;
    reference(x->u, x->v);
  } else if (const auto* x = std::get_if<DeleteEdge>(&u)) {
    if (!live(x->u) || !live(x->v) || !g_.has_edge(x->u, x->v)) return false;
    if (!edge_free(x->u, x->v)) return false;
    if (!room(x->u, 1) || !room(x->v, 1)) return false;
    reference(x->u, x->v);
  }
  updates_.push_back(u);
  return true;
}

RoundUpdates RoundBuilder::take() && {
  std::sort(updates_.begin(), updates_.end(), update_less);
  return RoundUpdates{std::move(updates_), profile_};
}

// ---------------------------------------------------------------------------
// Generation

namespace {

struct RoundContext {
  const Graph& g;
  const RoundBuilder& builder;
  std::vector<NodeId> nodes;  // pre-round node ids
  std::vector<Edge> edges;    // pre-round edges
};

NodeSet draw_neighbors(Rng& rng, const RoundContext& ctx, const GenParams& p,
                       const std::vector<NodeId>& pool) {
  NodeSet nbrs;
  if (pool.empty()) return nbrs;
  if (rng.chance(0.5)) {
    // Attach around one anchor so that cliques can grow.
    NodeId anchor = rng.pick(pool);
    nbrs.insert(anchor);
    if (ctx.g.has_node(anchor)) {
      for (NodeId w : ctx.g.neighbors(anchor)) {
        if (!ctx.builder.deleted(w) && rng.chance(0.7)) nbrs.insert(w);
      }
    }
  } else {
    for (NodeId w : pool) {
      if (rng.chance(p.density)) nbrs.insert(w);
    }
  }
  if (p.profile.batched && nbrs.size() > p.c) {
    std::vector<NodeId> all(nbrs.begin(), nbrs.end());
    NodeSet kept;
    std::size_t m = rng.below(p.c + 1);
    while (kept.size() < m) kept.insert(all[rng.below(all.size())]);
    nbrs = std::move(kept);
  }
  return nbrs;
}

std::optional<Update> draw_update(Rng& rng, UpdateKind kind,
                                  const RoundContext& ctx, const GenParams& p,
                                  NodeId next_id) {
  std::vector<NodeId> alive;
  for (NodeId v : ctx.nodes)
    if (!ctx.builder.deleted(v)) alive.push_back(v);

  switch (kind) {
    case UpdateKind::insert_node: {
      std::vector<NodeId> pool = alive;
      for (const Update& u : ctx.builder.updates()) {
        if (const auto* x = std::get_if<InsertNode>(&u)) pool.push_back(x->v);
      }
      return InsertNode{next_id, draw_neighbors(rng, ctx, p, pool)};
    }
    case UpdateKind::delete_node: {
      if (alive.size() <= p.min_nodes) return std::nullopt;
      return DeleteNode{rng.pick(alive)};
    }
    case UpdateKind::insert_edge: {
      if (alive.size() < 2) return std::nullopt;
      for (int tries = 0; tries < 8; ++tries) {
        NodeId a = rng.pick(alive);
        NodeId b = rng.pick(alive);
        if (a != b && !ctx.g.has_edge(a, b)) return InsertEdge{a, b};
      }
      return std::nullopt;
    }
    case UpdateKind::delete_edge: {
      if (ctx.edges.empty()) return std::nullopt;
      const Edge& e = rng.pick(ctx.edges);
      return DeleteEdge{e.first, e.second};
    }
  }
  return std::nullopt;
}

}  // namespace

Scenario gen_scenario(const GenParams& p) {
  if (p.density < 0.0 || p.density > 1.0) {
    throw GenerationError("density must lie in [0, 1]");
  }
  if (p.profile.batched && p.profile.c < 1) {
    throw GenerationError("incidence bound c must be at least 1");
  }
  std::array<double, 4> weights{};
  double total = 0.0;
  for (std::size_t k = 0; k < weights.size(); ++k) {
    if (p.profile.allows(static_cast<UpdateKind>(k)) && p.op_mix[k] > 0.0) {
      weights[k] = p.op_mix[k];
      total += weights[k];
    }
  }
  if (total <= 0.0 && p.rounds > 0) {
    throw GenerationError("op_mix gives zero weight to every allowed variant");
  }

  Rng rng(p.seed);
  Scenario sc;
  for (std::size_t i = 1; i <= p.n0; ++i) sc.g0.add_node(i);
  for (std::size_t i = 1; i <= p.n0; ++i)
    for (std::size_t j = i + 1; j <= p.n0; ++j)
      if (rng.chance(p.density)) sc.g0.add_edge(i, j);

  NodeId next_id = p.n0 + 1;
  Graph g = sc.g0;
  const std::size_t max_batch = p.max_batch ? p.max_batch : 3 * p.n0;

  for (std::size_t r = 0; r < p.rounds; ++r) {
    RoundBuilder builder(g, p.profile);
    RoundContext ctx{g, builder, g.node_ids(), g.edges()};
    const std::size_t target =
        p.profile.batched ? static_cast<std::size_t>(rng.below(max_batch + 1))
                          : 1;
    const std::size_t budget = p.retry_budget + 4 * target;
    for (std::size_t attempt = 0;
         attempt < budget && builder.updates().size() < target; ++attempt) {
      double x = rng.unit() * total;
      auto kind = UpdateKind::delete_edge;
      for (std::size_t k = 0; k < weights.size(); ++k) {
        if (weights[k] <= 0.0) continue;
        kind = static_cast<UpdateKind>(k);
        if (x < weights[k]) break;
        x -= weights[k];
      }
      auto cand = draw_update(rng, kind, ctx, p, next_id);
      if (cand && builder.try_add(*cand) &&
          std::holds_alternative<InsertNode>(*cand)) {
        ++next_id;
      }
    }
    if (!p.profile.batched && builder.updates().empty()) {
      throw GenerationError("seed " + std::to_string(p.seed) + ", round " +
                            std::to_string(r + 1) + ": no valid update after " +
                            std::to_string(budget) + " attempts");
    }
    RoundUpdates round = std::move(builder).take();
    if (auto res = validate_round(g, round); !res.ok()) {
      throw GenerationError("generated an invalid round: " + res.describe());
    }
    g = apply_round(g, round);
    sc.rounds.push_back(std::move(round));
  }
  return sc;
}

// ---------------------------------------------------------------------------
// Adversarial corpus

namespace {

RoundUpdates round_of(ProtocolKind k, std::vector<Update> ups) {
  std::sort(ups.begin(), ups.end(), update_less);
  return RoundUpdates{std::move(ups), profile_for(k, 4)};
}

NamedScenario make(std::string name, std::string description, ProtocolKind k,
                   int s, Graph g0, std::vector<std::vector<Update>> rounds) {
  NamedScenario ns;
  ns.name = std::move(name);
  ns.description = std::move(description);
  ns.protocol = k;
  ns.params.clique.s = s;
  ns.scenario.g0 = std::move(g0);
  for (auto& r : rounds) ns.scenario.rounds.push_back(round_of(k, std::move(r)));
  return ns;
}

}  // namespace

std::vector<NamedScenario> adversarial_corpus() {
  using PK = ProtocolKind;
  std::vector<NamedScenario> out;

  out.push_back(make(
      "hub-deletion",
      "triangle {1,2,3} plus hub 4 adjacent to all three; the hub is deleted",
      PK::clique, 3,
      Graph::from_edges({}, {{1, 2}, {2, 3}, {1, 3}, {1, 4}, {2, 4}, {3, 4}}),
      {{DeleteNode{4}}}));

  out.push_back(make(
      "observer-deletions",
      "triangle {1,2,3}; nodes 4, 5, 6 each touch two of its corners and "
      "are deleted one per round, so every corner once sees two DELETEs "
      "without a local loss",
      PK::clique, 3,
      Graph::from_edges({}, {{1, 2}, {2, 3}, {1, 3}, {4, 2}, {4, 3}, {5, 1},
                             {5, 3}, {6, 1}, {6, 2}}),
      {{DeleteNode{4}}, {DeleteNode{5}}, {DeleteNode{6}}}));

  out.push_back(make(
      "rebuild-clique",
      "K4 {1,2,3,4} destroyed by an edge deletion, then node 2 is deleted "
      "and node 5 joins {1,3,4}, rebuilding a K4",
      PK::clique, 4, Graph::complete(1, 4),
      {{DeleteEdge{1, 2}}, {DeleteNode{2}}, {InsertNode{5, {1, 3, 4}}}}));

  {
    std::vector<std::vector<Update>> rounds;
    for (NodeId v = 1; v <= 6; ++v) {
      NodeSet nbrs;
      for (NodeId w = 1; w < v; ++w) nbrs.insert(w);
      rounds.push_back({InsertNode{v, nbrs}});
    }
    out.push_back(make("k6-sequential",
                       "K6 built from an empty graph by six node insertions",
                       PK::clique, 6, Graph{}, std::move(rounds)));
  }

  out.push_back(make(
      "triple-insert",
      "three nodes inserted in one round, mutually adjacent, one of them "
      "also attached to an existing edge",
      PK::batched_triangle, 3, Graph::from_edges({}, {{1, 2}}),
      {{InsertNode{10, {}}, InsertNode{11, {10}}, InsertNode{12, {10, 11, 1}}}}));

  out.push_back(make(
      "mixed-batch",
      "one batched round deletes node 3, inserts node 6 on {1,2}, deletes "
      "edge 2-4 and inserts edge 1-4; nodes 1 and 2 each see three changes",
      PK::batched_triangle, 3,
      Graph::from_edges({}, {{1, 2}, {2, 3}, {1, 3}, {2, 4}, {4, 5}}),
      {{DeleteNode{3}, InsertNode{6, {1, 2}}, DeleteEdge{2, 4},
        InsertEdge{1, 4}}}));

  out.push_back(make(
      "k4-batch-insert",
      "all four nodes of a K4 inserted in the same round",
      PK::batched_clique, 4, Graph::from_edges({0}, {}),
      {{InsertNode{1, {}}, InsertNode{2, {1}}, InsertNode{3, {1, 2}},
        InsertNode{4, {1, 2, 3}}}}));

  out.push_back(make(
      "batched-clique-edge-cut",
      "K5 where two disjoint edges are deleted in one round, then a node "
      "deletion and a fresh node re-forms a K4",
      PK::batched_clique, 4, Graph::complete(1, 5),
      {{DeleteEdge{1, 2}, DeleteEdge{3, 4}}, {DeleteNode{1}},
       {InsertNode{6, {2, 3, 5}}}}));

  out.push_back(make(
      "wedge-flip-flop",
      "path 1-2-3 with tail 3-4; the closing edge 1-3 is inserted and "
      "deleted repeatedly, then the center is deleted",
      PK::wedge, 3, Graph::path(1, 4),
      {{InsertEdge{1, 3}}, {DeleteEdge{1, 3}}, {InsertEdge{1, 3}},
       {DeleteEdge{1, 3}}, {InsertEdge{1, 3}}, {DeleteEdge{2, 3}},
       {DeleteNode{2}}}));

  return out;
}

}  // namespace dynlist
