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

#include <cstddef>
#include <cstdint>
#include <map>

#include "dynlist/types.hpp"

namespace dynlist {

// Payload on one directed link for one round. Several logical sends to the
// same neighbor are merged into a single Message.
//
// Flag-only messages (the constant-bandwidth clique protocol) use a 2-bit
// tag:
//   01  NEW        a neighbor was gained
//   10  DELETE     a neighbor was lost
//   11  DELETE     a neighbor was lost, and the sender listed a triangle
//                  {sender, lost, receiver}
// ID-carrying messages leave every flag false.
struct Message {
  NodeSet new_ids;
  NodeSet del_ids;
  bool plain_new = false;
  bool plain_del = false;
  bool shared_del = false;  // only meaningful with plain_del

  bool empty() const {
    return new_ids.empty() && del_ids.empty() && !plain_new && !plain_del;
  }
  bool carries_ids() const { return !new_ids.empty() || !del_ids.empty(); }
  std::size_t id_count() const { return new_ids.size() + del_ids.size(); }

  void merge(const Message& other);

  bool operator==(const Message&) const = default;
};

using Outbox = std::map<NodeId, Message>;  // receiver -> message
using Inbox = std::map<NodeId, Message>;   // sender -> message

struct EncodingParams {
  unsigned id_bits = 32;
  unsigned count_bits = 8;

  bool fits_id(NodeId v) const {
    return id_bits >= 64 || v < (NodeId{1} << id_bits);
  }
  bool fits_count(std::size_t n) const {
    return count_bits >= 64 || n < (std::size_t{1} << count_bits);
  }
};

constexpr unsigned kTagBits = 2;

// Exact wire size. Flag-only: the 2-bit tag. ID-carrying: tag, then a
// count and the IDs for each of the NEW and DELETE sets. Empty: 0.
std::size_t message_bits(const Message& m, const EncodingParams& e);

}  // namespace dynlist
