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

#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "dynlist/message.hpp"
#include "dynlist/protocols.hpp"
#include "dynlist/types.hpp"

namespace dynlist {

struct SimParams {
  CliqueParams clique;
  std::size_t c = 4;
  EncodingParams enc;
};

enum class SubgraphKind { triangle, wedge, clique };

std::string to_string(SubgraphKind k);

// Witness entry. Wedges are stored as {center, lo, hi}; other kinds as the
// sorted vertex set.
struct Subgraph {
  SubgraphKind kind = SubgraphKind::triangle;
  std::vector<NodeId> nodes;

  auto operator<=>(const Subgraph&) const = default;

  static Subgraph of(const Triangle& t);
  static Subgraph of(const Wedge& w);
  static Subgraph of(const Clique& c);
};

std::string to_string(const Subgraph& s);

struct Verdict {
  bool sound = true;
  bool complete = true;
  bool bandwidth_ok = true;
  std::vector<Subgraph> missing;
  std::vector<std::pair<NodeId, Subgraph>> phantom;
  std::size_t max_bits_seen = 0;
  std::size_t bound_bits = 0;

  bool passed() const { return sound && complete && bandwidth_ok; }
};

struct NodeListing {
  TriangleSet triangles;
  WedgeSet wedges;
  CliqueSet cliques;

  bool operator==(const NodeListing&) const = default;
};

struct RoundReport {
  std::size_t round_index = 0;
  std::map<NodeId, NodeListing> listings;
  std::size_t max_message_bits = 0;
  std::size_t messages_sent = 0;
  // Largest ID count in any delivered message.
  std::size_t max_message_ids = 0;
  Verdict verdict;
};

struct Trace {
  ProtocolKind protocol = ProtocolKind::clique;
  SimParams params;
  std::vector<RoundReport> rounds;  // rounds[0] is the initial snapshot

  bool passed() const {
    for (const auto& r : rounds)
      if (!r.verdict.passed()) return false;
    return true;
  }
};

}  // namespace dynlist
