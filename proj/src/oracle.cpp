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

#include "dynlist/oracle.hpp"

#include <bit>
#include <cstdint>
#include <map>
#include <sstream>

namespace dynlist {

std::string to_string(SubgraphKind k) {
  switch (k) {
    case SubgraphKind::triangle: return "triangle";
    case SubgraphKind::wedge: return "wedge";
    case SubgraphKind::clique: return "clique";
  }
  return "?";
}

Subgraph Subgraph::of(const Triangle& t) {
  return {SubgraphKind::triangle, {t.ids.begin(), t.ids.end()}};
}
Subgraph Subgraph::of(const Wedge& w) {
  return {SubgraphKind::wedge, {w.center, w.lo, w.hi}};
}
Subgraph Subgraph::of(const Clique& c) { return {SubgraphKind::clique, c}; }

std::string to_string(const Subgraph& s) {
  std::ostringstream os;
  os << to_string(s.kind) << ' ';
  if (s.kind == SubgraphKind::wedge && s.nodes.size() == 3) {
    os << to_string(Wedge{s.nodes[0], s.nodes[1], s.nodes[2]});
  } else {
    os << to_string(Clique(s.nodes));
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Enumeration

TriangleSet enumerate_triangles(const Graph& g) {
  TriangleSet out;
  for (const auto& [u, nu] : g.adjacency()) {
    for (NodeId v : nu) {
      if (v <= u) continue;
      const NodeSet& nv = g.neighbors(v);
      for (NodeId w : nv) {
        if (w > v && nu.contains(w)) out.insert(Triangle{{u, v, w}});
      }
    }
  }
  return out;
}

namespace {

// Bron-Kerbosch over dense bitsets indexed by position in node_ids().
using Bits = std::vector<std::uint64_t>;

bool none(const Bits& b) {
  for (auto w : b)
    if (w) return false;
  return true;
}

Bits and_bits(const Bits& a, const Bits& b) {
  Bits out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] & b[i];
  return out;
}

std::size_t count_and(const Bits& a, const Bits& b) {
  std::size_t k = 0;
  for (std::size_t i = 0; i < a.size(); ++i) k += std::popcount(a[i] & b[i]);
  return k;
}

template <class F>
void for_each_bit(const Bits& b, F f) {
  for (std::size_t i = 0; i < b.size(); ++i) {
    for (std::uint64_t w = b[i]; w; w &= w - 1) {
      f(i * 64 + static_cast<std::size_t>(std::countr_zero(w)));
    }
  }
}

struct DenseGraph {
  std::vector<NodeId> ids;
  std::vector<Bits> adj;
};

void bron_kerbosch(const DenseGraph& g, std::vector<NodeId>& r, Bits p, Bits x,
                   std::vector<std::vector<NodeId>>& maximal) {
  if (none(p) && none(x)) {
    maximal.push_back(r);
    return;
  }
  // Pivot maximizing |P ∩ N(u)|.
  std::size_t pivot = 0;
  std::size_t best = 0;
  bool have = false;
  for (const Bits* side : {&p, &x}) {
    for_each_bit(*side, [&](std::size_t u) {
      std::size_t k = count_and(p, g.adj[u]);
      if (!have || k > best) {
        pivot = u;
        best = k;
        have = true;
      }
    });
  }
  Bits branch(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) branch[i] = p[i] & ~g.adj[pivot][i];
  for_each_bit(branch, [&](std::size_t v) {
    r.push_back(g.ids[v]);
    bron_kerbosch(g, r, and_bits(p, g.adj[v]), and_bits(x, g.adj[v]), maximal);
    r.pop_back();
    p[v / 64] &= ~(std::uint64_t{1} << (v % 64));
    x[v / 64] |= std::uint64_t{1} << (v % 64);
  });
}

void subsets_of_size(const std::vector<NodeId>& pool, std::size_t k,
                     std::size_t start, std::vector<NodeId>& cur,
                     CliqueSet& out) {
  if (cur.size() == k) {
    out.insert(cur);
    return;
  }
  for (std::size_t i = start; i + (k - cur.size()) <= pool.size(); ++i) {
    cur.push_back(pool[i]);
    subsets_of_size(pool, k, i + 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace

CliqueSet enumerate_cliques(const Graph& g, int s) {
  if (s < 3) throw std::invalid_argument("clique size must be at least 3");
  DenseGraph dg;
  dg.ids = g.node_ids();
  const std::size_t n = dg.ids.size();
  const std::size_t words = (n + 63) / 64;
  std::map<NodeId, std::size_t> index;
  for (std::size_t i = 0; i < n; ++i) index.emplace(dg.ids[i], i);
  dg.adj.assign(n, Bits(words));
  for (std::size_t i = 0; i < n; ++i) {
    for (NodeId w : g.neighbors(dg.ids[i])) {
      std::size_t j = index.at(w);
      dg.adj[i][j / 64] |= std::uint64_t{1} << (j % 64);
    }
  }
  Bits p(words);
  for (std::size_t i = 0; i < n; ++i) p[i / 64] |= std::uint64_t{1} << (i % 64);

  std::vector<std::vector<NodeId>> maximal;
  std::vector<NodeId> r;
  bron_kerbosch(dg, r, std::move(p), Bits(words), maximal);

  CliqueSet out;
  const auto k = static_cast<std::size_t>(s);
  for (auto& m : maximal) {
    if (m.size() < k) continue;
    std::sort(m.begin(), m.end());
    std::vector<NodeId> cur;
    subsets_of_size(m, k, 0, cur, out);
  }
  return out;
}

WedgeSet enumerate_induced_wedges(const Graph& g) {
  WedgeSet out;
  for (const auto& [v, nv] : g.adjacency()) {
    for (auto a = nv.begin(); a != nv.end(); ++a) {
      for (auto b = std::next(a); b != nv.end(); ++b) {
        if (!g.has_edge(*a, *b)) out.insert(Wedge{v, *a, *b});
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Verdicts

std::size_t bandwidth_bound(ProtocolKind proto, const SimParams& params) {
  const std::size_t w = params.enc.id_bits;
  const std::size_t cb = params.enc.count_bits;
  switch (proto) {
    case ProtocolKind::clique: return kTagBits;
    case ProtocolKind::wedge: return kTagBits + 2 * cb + w;
    case ProtocolKind::batched_triangle:
    case ProtocolKind::batched_clique:
      return kTagBits + 2 * cb + 2 * params.c * w;
  }
  return 0;
}

namespace {

bool is_triangle(const Graph& g, const Triangle& t) {
  return g.has_edge(t.ids[0], t.ids[1]) && g.has_edge(t.ids[1], t.ids[2]) &&
         g.has_edge(t.ids[0], t.ids[2]);
}

bool is_induced_wedge(const Graph& g, const Wedge& w) {
  return w.lo != w.hi && g.has_edge(w.center, w.lo) &&
         g.has_edge(w.center, w.hi) && !g.has_edge(w.lo, w.hi);
}

bool is_clique(const Graph& g, const Clique& c, std::size_t s) {
  if (c.size() != s) return false;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (!g.has_node(c[i])) return false;
    for (std::size_t j = i + 1; j < c.size(); ++j)
      if (!g.has_edge(c[i], c[j])) return false;
  }
  return true;
}

template <class Set, class Item, class Member>
void require_listed(const Set& truth, const RoundReport& rep, Member member,
                    std::vector<Subgraph>& missing) {
  for (const Item& item : truth) {
    Subgraph sg = Subgraph::of(item);
    bool found = false;
    for (NodeId v : sg.nodes) {
      auto it = rep.listings.find(v);
      if (it != rep.listings.end() && (it->second.*member).contains(item)) {
        found = true;
        break;
      }
    }
    if (!found) missing.push_back(std::move(sg));
  }
}

}  // namespace

Verdict check_round(const RoundReport& report, const Graph& g_after,
                    ProtocolKind proto, const SimParams& params) {
  Verdict v;
  v.bound_bits = bandwidth_bound(proto, params);
  v.max_bits_seen = report.max_message_bits;
  v.bandwidth_ok = v.max_bits_seen <= v.bound_bits;

  const auto s = static_cast<std::size_t>(params.clique.s);
  for (const auto& [node, l] : report.listings) {
    const bool alive = g_after.has_node(node);
    for (const Triangle& t : l.triangles) {
      if (!alive || !t.contains(node) || !is_triangle(g_after, t)) {
        v.phantom.emplace_back(node, Subgraph::of(t));
      }
    }
    for (const Wedge& w : l.wedges) {
      if (!alive || !w.contains(node) || !is_induced_wedge(g_after, w)) {
        v.phantom.emplace_back(node, Subgraph::of(w));
      }
    }
    for (const Clique& c : l.cliques) {
      if (!alive || !std::binary_search(c.begin(), c.end(), node) ||
          !is_clique(g_after, c, s)) {
        v.phantom.emplace_back(node, Subgraph::of(c));
      }
    }
  }

  switch (proto) {
    case ProtocolKind::clique:
    case ProtocolKind::batched_clique:
      require_listed<TriangleSet, Triangle>(enumerate_triangles(g_after),
                                            report, &NodeListing::triangles,
                                            v.missing);
      require_listed<CliqueSet, Clique>(enumerate_cliques(g_after, params.clique.s),
                                        report, &NodeListing::cliques,
                                        v.missing);
      break;
    case ProtocolKind::wedge:
      require_listed<WedgeSet, Wedge>(enumerate_induced_wedges(g_after),
                                      report, &NodeListing::wedges, v.missing);
      break;
    case ProtocolKind::batched_triangle:
      require_listed<TriangleSet, Triangle>(enumerate_triangles(g_after),
                                            report, &NodeListing::triangles,
                                            v.missing);
      break;
  }

  v.sound = v.phantom.empty();
  v.complete = v.missing.empty();
  return v;
}

}  // namespace dynlist
