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

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

namespace dynlist {

using NodeId = std::uint64_t;
using NodeSet = std::set<NodeId>;

// Unordered 3-set, stored sorted.
struct Triangle {
  std::array<NodeId, 3> ids{};

  auto operator<=>(const Triangle&) const = default;

  bool contains(NodeId v) const {
    return ids[0] == v || ids[1] == v || ids[2] == v;
  }
};

inline Triangle make_triangle(NodeId a, NodeId b, NodeId c) {
  Triangle t{{a, b, c}};
  std::sort(t.ids.begin(), t.ids.end());
  return t;
}

// Induced path of length two: center adjacent to both endpoints, endpoints
// non-adjacent. Endpoints stored with lo < hi.
struct Wedge {
  NodeId center = 0;
  NodeId lo = 0;
  NodeId hi = 0;

  auto operator<=>(const Wedge&) const = default;

  bool contains(NodeId v) const { return center == v || lo == v || hi == v; }
  bool has_endpoint(NodeId v) const { return lo == v || hi == v; }
  // The endpoint that is not `v`; `v` must be an endpoint.
  NodeId other_endpoint(NodeId v) const { return lo == v ? hi : lo; }
};

inline Wedge make_wedge(NodeId center, NodeId a, NodeId b) {
  return a < b ? Wedge{center, a, b} : Wedge{center, b, a};
}

// Sorted vertex set of a complete subgraph.
using Clique = std::vector<NodeId>;

using TriangleSet = std::set<Triangle>;
using WedgeSet = std::set<Wedge>;
using CliqueSet = std::set<Clique>;

std::string to_string(const Triangle& t);
std::string to_string(const Wedge& w);
std::string to_string(const Clique& c);

}  // namespace dynlist
