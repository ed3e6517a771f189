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

#include <algorithm>
#include <random>

#include "gtest/gtest.h"

namespace dynlist {
namespace {

using K = UpdateKind;

const LegalityProfile kAll = LegalityProfile::batch(
    {K::insert_node, K::delete_node, K::insert_edge, K::delete_edge}, 4);
const LegalityProfile kClique =
    LegalityProfile::single({K::insert_node, K::delete_node, K::delete_edge});

Graph triangle() { return Graph::complete(1, 3); }

TEST(GraphTest, CompleteAndPathShapes) {
  Graph k4 = Graph::complete(1, 4);
  EXPECT_EQ(k4.num_nodes(), 4u);
  EXPECT_EQ(k4.num_edges(), 6u);
  Graph p = Graph::path(1, 3);
  EXPECT_TRUE(p.has_edge(2, 1));
  EXPECT_FALSE(p.has_edge(1, 3));
  EXPECT_EQ(p.edges(), (std::vector<Edge>{{1, 2}, {2, 3}}));
  EXPECT_FALSE(k4.check_invariants().has_value());
}

TEST(GraphTest, NeighborsOfUnknownNodeThrows) {
  EXPECT_THROW(triangle().neighbors(9), std::out_of_range);
}

TEST(GraphTest, RemoveNodeDropsIncidentEdges) {
  Graph g = triangle();
  g.remove_node(3);
  EXPECT_EQ(g.edges(), (std::vector<Edge>{{1, 2}}));
  EXPECT_FALSE(g.check_invariants());
}

TEST(ApplyRoundTest, InsertIntoEmptyGraph) {
  Graph g = apply_round(Graph{}, {{InsertNode{1, {}}}, kClique});
  EXPECT_EQ(g.node_ids(), std::vector<NodeId>{1});
  EXPECT_EQ(g.num_edges(), 0u);
}

TEST(ApplyRoundTest, DeleteNodeOfTriangle) {
  Graph g = apply_round(triangle(), {{DeleteNode{3}}, kClique});
  EXPECT_EQ(g, Graph::from_edges({1, 2}, {{1, 2}}));
}

TEST(ApplyRoundTest, BatchedMixedRound) {
  auto c2 = LegalityProfile::batch(
      {K::insert_node, K::delete_node, K::insert_edge, K::delete_edge}, 2);
  Graph g = apply_round(Graph::path(1, 3),
                        {{InsertEdge{1, 3}, InsertNode{4, {2}}}, c2});
  EXPECT_EQ(g.edges(), (std::vector<Edge>{{1, 2}, {1, 3}, {2, 3}, {2, 4}}));
}

TEST(ApplyRoundTest, RejectsInvalidRound) {
  EXPECT_THROW(apply_round(triangle(), {{InsertEdge{1, 2}}, kClique}),
               InvalidRound);
}

TEST(ApplyRoundTest, NewNodesMayBeAdjacentToEachOther) {
  Graph g = apply_round(Graph::from_edges({1}, {}),
                        {{InsertNode{2, {1}}, InsertNode{3, {1, 2}}}, kAll});
  EXPECT_EQ(g, triangle());
}

TEST(ValidateRoundTest, ProfileForbidsInsertEdge) {
  auto r = validate_round(Graph::path(1, 3), {{InsertEdge{1, 3}}, kClique});
  ASSERT_FALSE(r.ok());
  EXPECT_TRUE(r.has(Rule::variant_not_allowed));
  EXPECT_NE(r.describe().find("variant not allowed"), std::string::npos);
}

TEST(ValidateRoundTest, IncidenceBound) {
  // Node 5 is the center of a star with three leaves.
  Graph g = Graph::from_edges({1, 2, 3, 5}, {{1, 5}, {2, 5}, {3, 5}});
  auto c2 = LegalityProfile::batch({K::delete_edge}, 2);
  auto r = validate_round(
      g, {{DeleteEdge{1, 5}, DeleteEdge{2, 5}, DeleteEdge{3, 5}}, c2});
  EXPECT_TRUE(r.has(Rule::incidence_bound));
  EXPECT_NE(r.describe().find("incidence bound"), std::string::npos);
}

TEST(ValidateRoundTest, DuplicateEdgeReference) {
  auto r = validate_round(triangle(), {{DeleteEdge{1, 2}, DeleteEdge{1, 2}}, kAll});
  EXPECT_TRUE(r.has(Rule::duplicate_edge));
  r = validate_round(triangle(), {{DeleteEdge{1, 2}, DeleteEdge{2, 1}}, kAll});
  EXPECT_TRUE(r.has(Rule::duplicate_edge));
}

TEST(ValidateRoundTest, SingleProfileAllowsOneUpdate) {
  auto r = validate_round(Graph::complete(1, 4),
                          {{DeleteEdge{1, 2}, DeleteEdge{3, 4}}, kClique});
  EXPECT_TRUE(r.has(Rule::too_many_updates));
  EXPECT_TRUE(validate_round(triangle(), {{}, kClique}).ok());
}

TEST(ValidateRoundTest, StructuralRules) {
  Graph g = triangle();
  EXPECT_TRUE(validate_round(g, {{InsertNode{1, {}}}, kAll}).has(Rule::node_exists));
  EXPECT_TRUE(validate_round(g, {{DeleteNode{7}}, kAll}).has(Rule::node_missing));
  EXPECT_TRUE(validate_round(g, {{InsertNode{4, {9}}}, kAll}).has(Rule::node_missing));
  EXPECT_TRUE(validate_round(g, {{InsertNode{4, {4}}}, kAll}).has(Rule::self_loop));
  EXPECT_TRUE(validate_round(g, {{InsertEdge{1, 1}}, kAll}).has(Rule::self_loop));
  EXPECT_TRUE(validate_round(g, {{InsertEdge{1, 2}}, kAll}).has(Rule::edge_exists));
  Graph p = Graph::path(1, 3);
  EXPECT_TRUE(validate_round(p, {{DeleteEdge{1, 3}}, kAll}).has(Rule::edge_missing));
}

TEST(ValidateRoundTest, NodeConflicts) {
  Graph g = triangle();
  EXPECT_TRUE(validate_round(g, {{InsertNode{4, {}}, InsertNode{4, {}}}, kAll})
                  .has(Rule::node_conflict));
  EXPECT_TRUE(validate_round(g, {{DeleteNode{1}, DeleteEdge{1, 2}}, kAll})
                  .has(Rule::node_conflict));
  EXPECT_TRUE(validate_round(g, {{DeleteNode{1}, InsertNode{4, {1}}}, kAll})
                  .has(Rule::node_conflict));
}

TEST(ValidateRoundTest, DeletedNodeDoesNotCountTowardIncidence) {
  // Deleting the hub of a star touches each leaf once; the hub itself is
  // gone and is not charged.
  Graph g = Graph::from_edges({1, 2, 3, 4, 5}, {{1, 2}, {1, 3}, {1, 4}, {1, 5}});
  auto c1 = LegalityProfile::batch({K::delete_node}, 1);
  EXPECT_TRUE(validate_round(g, {{DeleteNode{1}}, c1}).ok());
  auto r = validate_round(g, {{DeleteNode{1}, DeleteNode{2}}, c1});
  EXPECT_TRUE(r.ok()) << r.describe();
}

TEST(ValidateRoundTest, InsertedNodeChargedForItsEdges) {
  Graph g = Graph::complete(1, 4);
  auto c2 = LegalityProfile::batch({K::insert_node}, 2);
  EXPECT_TRUE(validate_round(g, {{InsertNode{5, {1, 2, 3}}}, c2})
                  .has(Rule::incidence_bound));
  EXPECT_TRUE(validate_round(g, {{InsertNode{5, {1, 2}}}, c2}).ok());
}

TEST(DiffAdjacencyTest, Examples) {
  Graph before = Graph::from_edges({1, 2}, {{1, 2}});
  Graph after = before;
  after.add_node(3);
  after.add_edge(1, 3);
  EXPECT_EQ(diff_adjacency(before, after, 1), (AdjacencyDiff{{3}, {}}));

  Graph t = triangle();
  Graph cut = t;
  cut.remove_edge(1, 2);
  EXPECT_EQ(diff_adjacency(t, cut, 1), (AdjacencyDiff{{}, {2}}));

  Graph p = Graph::path(1, 3);
  Graph q = apply_round(p, {{DeleteNode{3}, InsertNode{4, {2}}}, kAll});
  EXPECT_EQ(diff_adjacency(p, q, 2), (AdjacencyDiff{{4}, {3}}));
  // A freshly inserted node sees all of its neighbors as added.
  EXPECT_EQ(diff_adjacency(p, q, 4), (AdjacencyDiff{{2}, {}}));
}

TEST(ApplyRoundTest, OrderIndependent) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    Graph g = Graph::complete(1, 6);
    g.remove_edge(1, 2);
    g.remove_edge(3, 4);
    std::vector<Update> ups{DeleteNode{6}, InsertNode{7, {1}},
                            InsertNode{8, {7, 2}}, InsertEdge{1, 2},
                            DeleteEdge{4, 5}};
    Graph ref = apply_round(g, {ups, kAll});
    std::shuffle(ups.begin(), ups.end(), rng);
    Graph got = apply_round(g, {ups, kAll});
    EXPECT_EQ(got, ref);
    EXPECT_FALSE(got.check_invariants());
  }
}

TEST(UpdateTest, CanonicalOrderAndNames) {
  std::vector<Update> ups{DeleteEdge{1, 2}, InsertNode{5, {}}, DeleteNode{3},
                          InsertEdge{1, 4}};
  std::sort(ups.begin(), ups.end(), update_less);
  EXPECT_EQ(kind_of(ups.front()), K::insert_node);
  EXPECT_EQ(to_string(Update{DeleteEdge{1, 2}}), "DeleteEdge(1,2)");
  EXPECT_EQ(to_string(Rule::incidence_bound), "incidence bound");
}

}  // namespace
}  // namespace dynlist
