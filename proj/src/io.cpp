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

#include "dynlist/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

namespace dynlist {

using nlohmann::json;

namespace {

// Reads an object field with a typed check, reporting the JSON path.
class Reader {
 public:
  Reader(const json& j, std::string path) : j_(j), path_(std::move(path)) {}

  const json& node() const { return j_; }
  const std::string& path() const { return path_; }

  void expect_object(std::initializer_list<std::string_view> keys) const {
    if (!j_.is_object()) fail("expected an object");
    std::set<std::string_view> allowed(keys);
    for (const auto& [k, v] : j_.items()) {
      if (!allowed.contains(k)) fail("unknown field \"" + k + "\"");
    }
  }

  Reader at(std::string_view key) const {
    auto it = j_.find(std::string(key));
    if (it == j_.end()) fail("missing field \"" + std::string(key) + "\"");
    return Reader(*it, path_ + "." + std::string(key));
  }

  Reader at(std::size_t i) const {
    return Reader(j_.at(i), path_ + "[" + std::to_string(i) + "]");
  }

  bool has(std::string_view key) const {
    return j_.contains(std::string(key));
  }

  const json& array() const {
    if (!j_.is_array()) fail("expected an array");
    return j_;
  }

  std::uint64_t uint() const {
    if (!j_.is_number_unsigned()) fail("expected a non-negative integer");
    return j_.get<std::uint64_t>();
  }

  std::string string() const {
    if (!j_.is_string()) fail("expected a string");
    return j_.get<std::string>();
  }

  NodeSet id_set() const {
    NodeSet out;
    const json& a = array();
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (!out.insert(at(i).uint()).second) {
        at(i).fail("duplicate id");
      }
    }
    return out;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(path_.empty() ? "$" : path_, what);
  }

 private:
  const json& j_;
  std::string path_;
};

Update read_update(const Reader& r) {
  if (!r.node().is_object()) r.fail("expected an object");
  std::string op = r.at("op").string();
  if (op == "insert_node") {
    r.expect_object({"op", "node", "nbrs"});
    return InsertNode{r.at("node").uint(), r.at("nbrs").id_set()};
  }
  if (op == "delete_node") {
    r.expect_object({"op", "node"});
    return DeleteNode{r.at("node").uint()};
  }
  if (op == "insert_edge" || op == "delete_edge") {
    r.expect_object({"op", "u", "v"});
    NodeId u = r.at("u").uint();
    NodeId v = r.at("v").uint();
    if (op == "insert_edge") return InsertEdge{u, v};
    return DeleteEdge{u, v};
  }
  r.at("op").fail("unknown op \"" + op + "\"");
}

json write_update(const Update& u) {
  json j;
  if (const auto* x = std::get_if<InsertNode>(&u)) {
    j["op"] = "insert_node";
    j["node"] = x->v;
    j["nbrs"] = std::vector<NodeId>(x->nbrs.begin(), x->nbrs.end());
  } else if (const auto* x = std::get_if<DeleteNode>(&u)) {
    j["op"] = "delete_node";
    j["node"] = x->v;
  } else if (const auto* x = std::get_if<InsertEdge>(&u)) {
    auto e = make_edge(x->u, x->v);
    j["op"] = "insert_edge";
    j["u"] = e.first;
    j["v"] = e.second;
  } else if (const auto* x = std::get_if<DeleteEdge>(&u)) {
    auto e = make_edge(x->u, x->v);
    j["op"] = "delete_edge";
    j["u"] = e.first;
    j["v"] = e.second;
  }
  return j;
}

json write_params(const SimParams& p) {
  return json{{"s", p.clique.s},
              {"c", p.c},
              {"id_bits", p.enc.id_bits},
              {"count_bits", p.enc.count_bits}};
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace

ScenarioFile parse_scenario(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    // Translate the byte offset into a line number.
    std::size_t line = 1;
    for (std::size_t i = 0; i < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') ++line;
    }
    throw ParseError("line " + std::to_string(line), e.what());
  }

  Reader root(doc, "");
  root.expect_object({"version", "protocol", "params", "initial_graph", "rounds"});
  ScenarioFile f;

  if (root.at("version").string() != kScenarioVersion) {
    root.at("version").fail("unsupported version");
  }
  std::string proto = root.at("protocol").string();
  auto kind = parse_protocol_kind(proto);
  if (!kind) root.at("protocol").fail("unknown protocol \"" + proto + "\"");
  f.protocol = *kind;

  if (root.has("params")) {
    Reader p = root.at("params");
    p.expect_object({"s", "c", "id_bits", "count_bits"});
    if (p.has("s")) {
      auto s = p.at("s").uint();
      if (s < 3) p.at("s").fail("clique size must be at least 3");
      f.params.clique.s = static_cast<int>(s);
    }
    if (p.has("c")) {
      f.params.c = p.at("c").uint();
      if (f.params.c < 1) p.at("c").fail("c must be at least 1");
    }
    if (p.has("id_bits")) {
      auto w = p.at("id_bits").uint();
      if (w < 1 || w > 64) p.at("id_bits").fail("must lie in [1, 64]");
      f.params.enc.id_bits = static_cast<unsigned>(w);
    }
    if (p.has("count_bits")) {
      auto w = p.at("count_bits").uint();
      if (w < 1 || w > 64) p.at("count_bits").fail("must lie in [1, 64]");
      f.params.enc.count_bits = static_cast<unsigned>(w);
    }
  }

  Reader g = root.at("initial_graph");
  g.expect_object({"nodes", "edges"});
  for (NodeId v : g.at("nodes").id_set()) f.scenario.g0.add_node(v);
  {
    Reader edges = g.at("edges");
    const json& a = edges.array();
    for (std::size_t i = 0; i < a.size(); ++i) {
      Reader e = edges.at(i);
      if (e.array().size() != 2) e.fail("an edge is a pair of ids");
      NodeId u = e.at(std::size_t{0}).uint();
      NodeId v = e.at(std::size_t{1}).uint();
      if (u == v) e.fail("self-loop");
      if (!f.scenario.g0.has_node(u) || !f.scenario.g0.has_node(v)) {
        e.fail("endpoint is not listed in nodes");
      }
      if (f.scenario.g0.has_edge(u, v)) e.fail("duplicate edge");
      f.scenario.g0.add_edge(u, v);
    }
  }

  const LegalityProfile profile = profile_for(f.protocol, f.params.c);
  Reader rounds = root.at("rounds");
  const json& ra = rounds.array();
  for (std::size_t i = 0; i < ra.size(); ++i) {
    Reader round = rounds.at(i);
    const json& ua = round.array();
    RoundUpdates ru;
    ru.profile = profile;
    for (std::size_t k = 0; k < ua.size(); ++k) {
      ru.updates.push_back(read_update(round.at(k)));
    }
    f.scenario.rounds.push_back(std::move(ru));
  }
  return f;
}

std::string serialize_scenario(const ScenarioFile& f) {
  json j;
  j["version"] = kScenarioVersion;
  j["protocol"] = to_string(f.protocol);
  j["params"] = write_params(f.params);
  json edges = json::array();
  for (const auto& [u, v] : f.scenario.g0.edges()) edges.push_back({u, v});
  j["initial_graph"] = {{"nodes", f.scenario.g0.node_ids()}, {"edges", edges}};
  json rounds = json::array();
  for (const auto& r : f.scenario.rounds) {
    std::vector<Update> ups = r.updates;
    std::sort(ups.begin(), ups.end(), update_less);
    json jr = json::array();
    for (const auto& u : ups) jr.push_back(write_update(u));
    rounds.push_back(std::move(jr));
  }
  j["rounds"] = std::move(rounds);
  return dump(j);
}

namespace {

json write_subgraph(const Subgraph& s) {
  return json{{"kind", to_string(s.kind)}, {"nodes", s.nodes}};
}

json write_verdict(const Verdict& v) {
  json missing = json::array();
  for (const auto& s : v.missing) missing.push_back(write_subgraph(s));
  json phantom = json::array();
  for (const auto& [node, s] : v.phantom) {
    json e = write_subgraph(s);
    e["node"] = node;
    phantom.push_back(std::move(e));
  }
  return json{{"sound", v.sound},
              {"complete", v.complete},
              {"bandwidth_ok", v.bandwidth_ok},
              {"max_bits_seen", v.max_bits_seen},
              {"bound_bits", v.bound_bits},
              {"missing", std::move(missing)},
              {"phantom", std::move(phantom)}};
}

}  // namespace

std::string serialize_trace(const Trace& t) {
  json j;
  j["format"] = kTraceFormat;
  j["protocol"] = to_string(t.protocol);
  j["params"] = write_params(t.params);
  j["passed"] = t.passed();
  json rounds = json::array();
  for (const auto& r : t.rounds) {
    json listings = json::array();
    for (const auto& [node, l] : r.listings) {
      json tri = json::array();
      for (const auto& x : l.triangles) tri.push_back(x.ids);
      json wedges = json::array();
      for (const auto& w : l.wedges) wedges.push_back({w.center, w.lo, w.hi});
      json cliques = json::array();
      for (const auto& c : l.cliques) cliques.push_back(c);
      listings.push_back(json{{"node", node},
                              {"triangles", std::move(tri)},
                              {"wedges", std::move(wedges)},
                              {"cliques", std::move(cliques)}});
    }
    rounds.push_back(json{{"index", r.round_index},
                          {"listings", std::move(listings)},
                          {"max_message_bits", r.max_message_bits},
                          {"messages_sent", r.messages_sent},
                          {"verdict", write_verdict(r.verdict)}});
  }
  j["rounds"] = std::move(rounds);
  return dump(j);
}

ScenarioFile read_scenario_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(path, "cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_scenario(ss.str());
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
  if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace dynlist
