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

// JSON scenario and trace files. Both serializers are canonical: object
// keys sorted, ID sets sorted, updates within a round in update_less order,
// two-space indentation and a trailing newline. Equal inputs therefore
// produce byte-identical files.
//
// Scenario file:
//   {
//     "initial_graph": {"edges": [[1, 2], ...], "nodes": [1, 2, ...]},
//     "params": {"c": 4, "count_bits": 8, "id_bits": 32, "s": 4},
//     "protocol": "clique" | "wedge" | "batched_triangle" | "batched_clique",
//     "rounds": [
//       [ {"op": "insert_node", "node": 7, "nbrs": [1, 2]},
//         {"op": "delete_node", "node": 3},
//         {"op": "insert_edge", "u": 1, "v": 5},
//         {"op": "delete_edge", "u": 2, "v": 4} ],
//       ...
//     ],
//     "version": "dynlist-scenario/1"
//   }

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "dynlist/protocols.hpp"
#include "dynlist/report.hpp"
#include "dynlist/workload.hpp"

namespace dynlist {

inline constexpr std::string_view kScenarioVersion = "dynlist-scenario/1";
inline constexpr std::string_view kTraceFormat = "dynlist-trace/1";

struct ScenarioFile {
  ProtocolKind protocol = ProtocolKind::clique;
  SimParams params;
  Scenario scenario;
};

// `where` names the offending line or field, e.g. "rounds[2][0].nbrs".
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string where, const std::string& what)
      : std::runtime_error(where + ": " + what), where_(std::move(where)) {}
  const std::string& where() const { return where_; }

 private:
  std::string where_;
};

ScenarioFile parse_scenario(std::string_view text);
std::string serialize_scenario(const ScenarioFile& f);

std::string serialize_trace(const Trace& t);

// Round profiles in a parsed file are set from its protocol and c.
ScenarioFile read_scenario_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace dynlist
