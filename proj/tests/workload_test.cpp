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

#include "dynlist/engine.hpp"
#include "gtest/gtest.h"

namespace dynlist {
namespace {

using K = UpdateKind;

const ProtocolKind kAllKinds[] = {ProtocolKind::clique, ProtocolKind::wedge,
                                  ProtocolKind::batched_triangle,
                                  ProtocolKind::batched_clique};

TEST(RngTest, BelowStaysInRange) {
  Rng rng(5);
  std::vector<int> hits(7);
  for (int i = 0; i < 7000; ++i) ++hits[rng.below(7)];
  for (int h : hits) EXPECT_GT(h, 800);
  for (int i = 0; i < 100; ++i) {
    double u = rng.unit();
    EXPECT_GE(u, 0.0);
    EXPECT_LT(u, 1.0);
  }
}

TEST(RngTest, PinnedEngine) {
  // The 10000th output of the 64-bit Mersenne Twister with the default
  // seed, as fixed by the C++ standard.
  Rng rng(5489);
  std::uint64_t x = 0;
  for (int i = 0; i < 10000; ++i) x = rng.next();
  EXPECT_EQ(x, 9981545732273789042ULL);
}

TEST(GenScenarioTest, ZeroRounds) {
  GenParams p = GenParams::for_protocol(ProtocolKind::clique, 1, 8, 0, 0.5);
  Scenario sc = gen_scenario(p);
  EXPECT_TRUE(sc.rounds.empty());
  EXPECT_EQ(sc.g0.num_nodes(), 8u);
}

TEST(GenScenarioTest, SameSeedSameScenario) {
  for (auto k : kAllKinds) {
    GenParams p = GenParams::for_protocol(k, 42, 12, 40, 0.3);
    Scenario a = gen_scenario(p);
    Scenario b = gen_scenario(p);
    EXPECT_EQ(a.g0, b.g0);
    ASSERT_EQ(a.rounds.size(), b.rounds.size());
    for (std::size_t i = 0; i < a.rounds.size(); ++i) {
      EXPECT_EQ(a.rounds[i].updates, b.rounds[i].updates);
    }
  }
}

TEST(GenScenarioTest, DifferentSeedsDiffer) {
  Scenario a = gen_scenario(GenParams::for_protocol(ProtocolKind::wedge, 1, 12, 20, 0.3));
  Scenario b = gen_scenario(GenParams::for_protocol(ProtocolKind::wedge, 2, 12, 20, 0.3));
  EXPECT_FALSE(a.g0 == b.g0);
}

TEST(GenScenarioTest, EveryRoundValidUnderProfile) {
  for (auto k : kAllKinds) {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
      GenParams p = GenParams::for_protocol(k, seed, 5 + seed % 16, 40, 0.3);
      Scenario sc = gen_scenario(p);
      Graph g = sc.g0;
      ASSERT_FALSE(g.check_invariants());
      for (const auto& r : sc.rounds) {
        EXPECT_EQ(r.profile, profile_for(k, 4));
        auto v = validate_round(g, r);
        ASSERT_TRUE(v.ok()) << to_string(k) << " seed " << seed << ": "
                            << v.describe();
        g = apply_round(g, r);
        ASSERT_FALSE(g.check_invariants());
      }
    }
  }
}

TEST(GenScenarioTest, SingleProfileFilter) {
  GenParams p = GenParams::for_protocol(ProtocolKind::clique, 9, 10, 100, 0.4);
  for (const auto& r : gen_scenario(p).rounds) {
    ASSERT_LE(r.updates.size(), 1u);
    for (const auto& u : r.updates) EXPECT_NE(kind_of(u), K::insert_edge);
  }
}

TEST(GenScenarioTest, BatchedRoundsRespectSizeAndKinds) {
  std::size_t biggest = 0;
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    GenParams p = GenParams::for_protocol(ProtocolKind::batched_clique, seed, 10,
                                          30, 0.3);
    for (const auto& r : gen_scenario(p).rounds) {
      EXPECT_LE(r.updates.size(), 30u);
      biggest = std::max(biggest, r.updates.size());
      for (const auto& u : r.updates) EXPECT_NE(kind_of(u), K::insert_edge);
    }
  }
  // Batches are actually batched.
  EXPECT_GT(biggest, 3u);
}

TEST(GenScenarioTest, RejectsDegenerateParams) {
  GenParams p = GenParams::for_protocol(ProtocolKind::clique, 1, 5, 5, 0.3);
  p.op_mix = {0, 0, 0, 0};
  EXPECT_THROW(gen_scenario(p), GenerationError);
}

TEST(RoundBuilderTest, RefusesConflicts) {
  Graph g = Graph::complete(1, 4);
  RoundBuilder b(g, profile_for(ProtocolKind::batched_triangle, 2));
  EXPECT_TRUE(b.try_add(DeleteNode{4}));
  EXPECT_FALSE(b.try_add(DeleteEdge{1, 4}));
  EXPECT_FALSE(b.try_add(DeleteNode{4}));
  EXPECT_TRUE(b.try_add(DeleteEdge{1, 2}));
  // Node 1 already carries two incident updates.
  EXPECT_FALSE(b.try_add(DeleteEdge{1, 3}));
  EXPECT_TRUE(b.deleted(4));
  RoundUpdates r = std::move(b).take();
  EXPECT_TRUE(validate_round(g, r).ok());
}

TEST(AdversarialCorpusTest, ContainsRequiredScenarios) {
  std::set<std::string> names;
  for (const auto& ns : adversarial_corpus()) names.insert(ns.name);
  for (const char* want : {"hub-deletion", "rebuild-clique", "triple-insert",
                           "mixed-batch", "k6-sequential", "wedge-flip-flop"}) {
    EXPECT_TRUE(names.contains(want)) << want;
  }
}

TEST(AdversarialCorpusTest, AllPass) {
  for (const auto& ns : adversarial_corpus()) {
    Trace t = run_scenario(ns.scenario.g0, ns.scenario.rounds, ns.protocol,
                           ns.params);
    EXPECT_TRUE(t.passed()) << ns.name;
  }
}

const NamedScenario& corpus_entry(const std::string& name) {
  static const auto corpus = adversarial_corpus();
  for (const auto& ns : corpus)
    if (ns.name == name) return ns;
  throw std::out_of_range(name);
}

TEST(AdversarialCorpusTest, HubDeletionKeepsTriangle) {
  const auto& ns = corpus_entry("hub-deletion");
  Trace t = run_scenario(ns.scenario.g0, ns.scenario.rounds, ns.protocol,
                         ns.params);
  bool listed = false;
  for (const auto& [v, l] : t.rounds.back().listings) {
    listed = listed || l.triangles.contains(make_triangle(1, 2, 3));
  }
  EXPECT_TRUE(listed);
}

TEST(AdversarialCorpusTest, TripleInsertListedByAllThree) {
  const auto& ns = corpus_entry("triple-insert");
  Trace t = run_scenario(ns.scenario.g0, ns.scenario.rounds, ns.protocol,
                         ns.params);
  for (NodeId v : {10, 11, 12}) {
    EXPECT_TRUE(t.rounds.back().listings.at(v).triangles.contains(
        make_triangle(10, 11, 12)))
        << v;
  }
}

TEST(AdversarialCorpusTest, RebuiltCliqueListedByEarliestSurvivor) {
  const auto& ns = corpus_entry("rebuild-clique");
  Trace t = run_scenario(ns.scenario.g0, ns.scenario.rounds, ns.protocol,
                         ns.params);
  const auto& last = t.rounds.back().listings;
  // 1, 3, 4 are original nodes; 5 is the newcomer.
  EXPECT_TRUE(last.at(1).cliques.contains({1, 3, 4, 5}));
}

}  // namespace
}  // namespace dynlist
