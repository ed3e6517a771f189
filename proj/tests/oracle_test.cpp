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

#include <random>

#include "gtest/gtest.h"
#include "naive.hpp"

namespace dynlist {
namespace {

Graph star() {
  return Graph::from_edges({0, 1, 2, 3}, {{0, 1}, {0, 2}, {0, 3}});
}

TEST(EnumerateTrianglesTest, Examples) {
  EXPECT_TRUE(enumerate_triangles(Graph{}).empty());
  EXPECT_EQ(enumerate_triangles(Graph::complete(1, 4)).size(), 4u);
  EXPECT_TRUE(enumerate_triangles(Graph::path(1, 3)).empty());
}

TEST(EnumerateCliquesTest, Examples) {
  EXPECT_EQ(enumerate_cliques(Graph::complete(1, 5), 4).size(), 5u);
  EXPECT_TRUE(enumerate_cliques(Graph::complete(1, 3), 4).empty());
  Graph diamond = Graph::complete(1, 4);
  diamond.remove_edge(3, 4);
  EXPECT_EQ(enumerate_cliques(diamond, 3), (CliqueSet{{1, 2, 3}, {1, 2, 4}}));
  EXPECT_THROW(enumerate_cliques(diamond, 2), std::invalid_argument);
}

TEST(EnumerateWedgesTest, Examples) {
  EXPECT_TRUE(enumerate_induced_wedges(Graph::complete(1, 3)).empty());
  EXPECT_EQ(enumerate_induced_wedges(star()),
            (WedgeSet{make_wedge(0, 1, 2), make_wedge(0, 1, 3),
                      make_wedge(0, 2, 3)}));
  Graph g = Graph::complete(1, 4);
  g.remove_edge(1, 2);
  EXPECT_EQ(enumerate_induced_wedges(g),
            (WedgeSet{make_wedge(3, 1, 2), make_wedge(4, 1, 2)}));
}

TEST(EnumerateTest, AgreesWithBruteForce) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    std::size_t n = rng() % 11;
    std::bernoulli_distribution coin(0.2 + 0.06 * (trial % 10));
    Graph g;
    for (NodeId v = 1; v <= n; ++v) g.add_node(v);
    for (NodeId u = 1; u <= n; ++u)
      for (NodeId v = u + 1; v <= n; ++v)
        if (coin(rng)) g.add_edge(u, v);
    EXPECT_EQ(enumerate_triangles(g), testing::naive_triangles(g));
    EXPECT_EQ(enumerate_induced_wedges(g), testing::naive_wedges(g));
    for (int s = 3; s <= 6; ++s) {
      EXPECT_EQ(enumerate_cliques(g, s), testing::naive_cliques(g, s));
    }
  }
}

TEST(EnumerateCliquesTest, SizeThreeEqualsTriangles) {
  Graph g = Graph::complete(1, 6);
  g.remove_edge(1, 2);
  CliqueSet tri;
  for (const Triangle& t : enumerate_triangles(g))
    tri.insert({t.ids.begin(), t.ids.end()});
  EXPECT_EQ(enumerate_cliques(g, 3), tri);
}

TEST(BandwidthBoundTest, PerProtocol) {
  SimParams p;
  EXPECT_EQ(bandwidth_bound(ProtocolKind::clique, p), 2u);
  EXPECT_EQ(bandwidth_bound(ProtocolKind::wedge, p), 2u + 16 + 32);
  EXPECT_EQ(bandwidth_bound(ProtocolKind::batched_triangle, p), 2u + 16 + 256);
  p.c = 2;
  EXPECT_EQ(bandwidth_bound(ProtocolKind::batched_clique, p), 2u + 16 + 128);
}

RoundReport perfect_triangle_report(const Graph& g) {
  RoundReport r;
  for (NodeId v : g.node_ids()) r.listings[v];
  for (const Triangle& t : enumerate_triangles(g))
    r.listings[t.ids[0]].triangles.insert(t);
  return r;
}

TEST(CheckRoundTest, PerfectRound) {
  Graph g = Graph::complete(1, 4);
  Verdict v = check_round(perfect_triangle_report(g), g,
                          ProtocolKind::batched_triangle, {});
  EXPECT_TRUE(v.sound && v.complete && v.bandwidth_ok);
}

TEST(CheckRoundTest, FakeListingIsPhantom) {
  Graph g = Graph::path(1, 3);
  RoundReport r = perfect_triangle_report(g);
  r.listings[1].triangles.insert(make_triangle(1, 2, 3));
  Verdict v = check_round(r, g, ProtocolKind::batched_triangle, {});
  ASSERT_EQ(v.phantom.size(), 1u);
  EXPECT_EQ(v.phantom[0].first, 1u);
  EXPECT_EQ(v.phantom[0].second, Subgraph::of(make_triangle(1, 2, 3)));
  EXPECT_FALSE(v.passed());
}

TEST(CheckRoundTest, SuppressedListingIsMissing) {
  Graph g = Graph::complete(1, 3);
  RoundReport r = perfect_triangle_report(g);
  r.listings[1].triangles.clear();
  Verdict v = check_round(r, g, ProtocolKind::batched_triangle, {});
  EXPECT_TRUE(v.sound);
  ASSERT_EQ(v.missing.size(), 1u);
  EXPECT_EQ(to_string(v.missing[0]), "triangle {1,2,3}");
}

TEST(CheckRoundTest, ListingByNonMemberIsPhantom) {
  Graph g = Graph::complete(1, 3);
  g.add_node(4);
  RoundReport r = perfect_triangle_report(g);
  r.listings[4].triangles.insert(make_triangle(1, 2, 3));
  EXPECT_FALSE(check_round(r, g, ProtocolKind::batched_triangle, {}).sound);
}

TEST(CheckRoundTest, BandwidthOverrun) {
  Graph g = Graph::complete(1, 3);
  RoundReport r = perfect_triangle_report(g);
  r.listings[1].cliques.insert({1, 2, 3});
  r.max_message_bits = 3;
  SimParams p;
  p.clique.s = 3;
  Verdict v = check_round(r, g, ProtocolKind::clique, p);
  EXPECT_FALSE(v.bandwidth_ok);
  EXPECT_EQ(v.bound_bits, 2u);
}

TEST(CheckRoundTest, WedgeCompleteness) {
  Graph g = star();
  RoundReport r;
  for (NodeId v : g.node_ids()) r.listings[v];
  r.listings[1].wedges.insert(make_wedge(0, 1, 2));
  r.listings[3].wedges.insert(make_wedge(0, 1, 3));
  Verdict v = check_round(r, g, ProtocolKind::wedge, {});
  EXPECT_TRUE(v.sound);
  EXPECT_EQ(v.missing, std::vector<Subgraph>{Subgraph::of(make_wedge(0, 2, 3))});
}

}  // namespace
}  // namespace dynlist
