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

#include "dynlist/message.hpp"

namespace dynlist {

void Message::merge(const Message& other) {
  new_ids.insert(other.new_ids.begin(), other.new_ids.end());
  del_ids.insert(other.del_ids.begin(), other.del_ids.end());
  plain_new = plain_new || other.plain_new;
  plain_del = plain_del || other.plain_del;
  shared_del = shared_del || other.shared_del;
}

std::size_t message_bits(const Message& m, const EncodingParams& e) {
  if (m.empty()) return 0;
  if (!m.carries_ids()) return kTagBits;
  return kTagBits + e.count_bits + m.new_ids.size() * e.id_bits +
         e.count_bits + m.del_ids.size() * e.id_bits;
}

}  // namespace dynlist
