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

// Ground-truth enumeration and per-round verdicts.

#pragma once

#include <cstddef>

#include "dynlist/graph.hpp"
#include "dynlist/protocols.hpp"
#include "dynlist/report.hpp"

namespace dynlist {

TriangleSet enumerate_triangles(const Graph& g);

// Every complete s-subset. Maximal cliques come from Bron-Kerbosch with
// Tomita pivoting and are then expanded into their s-subsets.
CliqueSet enumerate_cliques(const Graph& g, int s);

WedgeSet enumerate_induced_wedges(const Graph& g);

// Largest message a correct run of `proto` may send.
std::size_t bandwidth_bound(ProtocolKind proto, const SimParams& params);

Verdict check_round(const RoundReport& report, const Graph& g_after,
                    ProtocolKind proto, const SimParams& params);

}  // namespace dynlist
