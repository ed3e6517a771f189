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

#include "dynlist/engine.hpp"

#include "dynlist/oracle.hpp"

namespace dynlist {

namespace {

void check_ids_fit(const Graph& g, const EncodingParams& enc) {
  for (NodeId v : g.node_ids()) {
    if (!enc.fits_id(v)) {
      throw std::invalid_argument("node id " + std::to_string(v) +
                                  " does not fit in " +
                                  std::to_string(enc.id_bits) + " bits");
    }
  }
}

void check_listing_shape(const NodeState& st) {
  const NodeId self = st.self_id;
  for (const Triangle& t : st.tri) {
    if (!t.contains(self) || t.ids[0] == t.ids[1] || t.ids[1] == t.ids[2]) {
      throw ProtocolError("node " + std::to_string(self) +
                          " lists malformed triangle " + to_string(t));
    }
  }
  for (const Wedge& w : st.wedges) {
    if (!w.contains(self) || w.lo == w.hi || w.center == w.lo ||
        w.center == w.hi) {
      throw ProtocolError("node " + std::to_string(self) +
                          " lists malformed wedge " + to_string(w));
    }
  }
}

}  // namespace

NetworkState init_network(const Graph& g0,
                          std::shared_ptr<const Protocol> protocol,
                          const SimParams& params) {
  if (auto broken = g0.check_invariants()) {
    throw std::invalid_argument("initial graph: " + *broken);
  }
  check_ids_fit(g0, params.enc);
  NetworkState net;
  net.truth = g0;
  net.protocol = std::move(protocol);
  net.params = params;
  for (NodeId v : g0.node_ids()) {
    NodeState st = net.protocol->initial_state(g0, v);
    check_listing_shape(st);
    net.states.emplace(v, std::move(st));
  }
  return net;
}

RoundReport snapshot(const NetworkState& net) {
  RoundReport rep;
  rep.round_index = net.round;
  const bool cliques = derives_cliques(net.protocol->kind());
  for (const auto& [v, st] : net.states) {
    NodeListing& l = rep.listings[v];
    l.triangles = st.tri;
    l.wedges = st.wedges;
    if (cliques) l.cliques = derive_cliques(st, net.params.clique);
  }
  return rep;
}

RoundReport run_round(NetworkState& net, const RoundUpdates& r) {
  // Phase 1: topology change.
  RoundUpdates checked{r.updates, net.profile()};
  Graph after = apply_round(net.truth, checked);
  check_ids_fit(after, net.params.enc);

  std::map<NodeId, AdjacencyDiff> diffs;
  std::map<NodeId, NodeState> states;
  for (NodeId v : after.node_ids()) {
    diffs.emplace(v, diff_adjacency(net.truth, after, v));
    auto it = net.states.find(v);
    NodeState st;
    if (it != net.states.end() && net.truth.has_node(v)) {
      st = std::move(it->second);
    } else {
      st.self_id = v;
    }
    st.nbrs = after.neighbors(v);
    states.emplace(v, std::move(st));
  }

  // Phase 2: emit and deliver over post-update links.
  std::map<NodeId, Inbox> inboxes;
  RoundReport rep;
  for (const auto& [v, st] : states) {
    Outbox out = net.protocol->emit(st, diffs.at(v));
    for (auto& [w, m] : out) {
      if (m.empty() || !after.has_edge(v, w)) continue;
      inboxes[w][v].merge(m);
    }
  }
  for (const auto& [w, inbox] : inboxes) {
    for (const auto& [v, m] : inbox) {
      rep.max_message_bits =
          std::max(rep.max_message_bits, message_bits(m, net.params.enc));
      rep.max_message_ids = std::max(rep.max_message_ids, m.id_count());
      ++rep.messages_sent;
    }
  }

  // Phase 3: absorb. Each node reads only its own state and inbox.
  static const Inbox kNoMail;
  for (auto& [v, st] : states) {
    auto in = inboxes.find(v);
    st = net.protocol->absorb(std::move(st), diffs.at(v),
                              in == inboxes.end() ? kNoMail : in->second);
    check_listing_shape(st);
  }

  net.truth = std::move(after);
  net.states = std::move(states);
  ++net.round;

  RoundReport snap = snapshot(net);
  snap.max_message_bits = rep.max_message_bits;
  snap.max_message_ids = rep.max_message_ids;
  snap.messages_sent = rep.messages_sent;
  return snap;
}

Trace run_scenario(const Graph& g0, const std::vector<RoundUpdates>& rounds,
                   std::shared_ptr<const Protocol> protocol,
                   const SimParams& params) {
  Trace trace;
  trace.protocol = protocol->kind();
  trace.params = params;
  NetworkState net;
  try {
    net = init_network(g0, std::move(protocol), params);
  } catch (const ProtocolError& e) {
    throw ScenarioError(0, ScenarioError::Cause::protocol_failure, e.what());
  } catch (const std::exception& e) {
    throw ScenarioError(0, ScenarioError::Cause::invalid_input, e.what());
  }
  RoundReport first = snapshot(net);
  first.verdict = check_round(first, net.truth, trace.protocol, params);
  trace.rounds.push_back(std::move(first));
  for (std::size_t i = 0; i < rounds.size(); ++i) {
    RoundReport rep;
    try {
      rep = run_round(net, rounds[i]);
    } catch (const ProtocolError& e) {
      throw ScenarioError(i + 1, ScenarioError::Cause::protocol_failure,
                          e.what());
    } catch (const std::exception& e) {
      throw ScenarioError(i + 1, ScenarioError::Cause::invalid_input, e.what());
    }
    rep.verdict = check_round(rep, net.truth, trace.protocol, params);
    trace.rounds.push_back(std::move(rep));
  }
  return trace;
}

Trace run_scenario(const Graph& g0, const std::vector<RoundUpdates>& rounds,
                   ProtocolKind kind, const SimParams& params) {
  return run_scenario(g0, rounds, make_protocol(kind, params.c), params);
}

}  // namespace dynlist
