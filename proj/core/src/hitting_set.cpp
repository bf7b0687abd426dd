// Copyright 2026 The Stripspan Authors
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

#include "stripspan/hitting_set.hpp"

#include <algorithm>
#include <stdexcept>

namespace stripspan {

std::size_t SetFamily::min_size() const {
  std::size_t best = 0;
  for (const auto& s : members) {
    if (best == 0 || s.size() < best) best = s.size();
  }
  return best;
}

std::vector<Vertex> hitting_set(Vertex n, const SetFamily& family) {
  if (family.empty()) return {};
  std::vector<std::vector<std::int32_t>> occurs(n);
  for (std::size_t i = 0; i < family.members.size(); ++i) {
    const auto& member = family.members[i];
    if (member.empty()) {
      throw std::invalid_argument("hitting set: empty member is unhittable");
    }
    for (Vertex v : member) {
      if (v < 0 || v >= n) {
        throw std::invalid_argument("hitting set: member vertex out of range");
      }
      occurs[v].push_back(static_cast<std::int32_t>(i));
    }
  }

  std::vector<std::int32_t> unhit_count(n, 0);
  for (Vertex v = 0; v < n; ++v) {
    unhit_count[v] = static_cast<std::int32_t>(occurs[v].size());
  }
  std::vector<char> hit(family.size(), 0);
  std::size_t remaining = family.size();
  std::vector<Vertex> result;
  while (remaining > 0) {
    Vertex best = 0;
    for (Vertex v = 1; v < n; ++v) {
      if (unhit_count[v] > unhit_count[best]) best = v;  // ties keep lowest id
    }
    result.push_back(best);
    for (std::int32_t i : occurs[best]) {
      if (hit[i]) continue;
      hit[i] = 1;
      --remaining;
      for (Vertex w : family.members[i]) --unhit_count[w];
    }
  }
  std::sort(result.begin(), result.end());
  return result;
}

}  // namespace stripspan
