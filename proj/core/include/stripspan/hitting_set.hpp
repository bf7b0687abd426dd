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

#ifndef STRIPSPAN_HITTING_SET_HPP_
#define STRIPSPAN_HITTING_SET_HPP_

#include <cstddef>
#include <vector>

#include "stripspan/types.hpp"

namespace stripspan {

/// Family of vertex subsets over a universe 0..n-1.
struct SetFamily {
  std::vector<std::vector<Vertex>> members;

  std::size_t size() const { return members.size(); }
  bool empty() const { return members.empty(); }
  /// Size of the smallest member; 0 for an empty family.
  std::size_t min_size() const;
};

/// Greedy hitting set: repeatedly pick the vertex hitting the most un-hit
/// members, lowest id on ties. The result hits every member and has at most
/// ceil((n / min_size) * (ln |family| + 1)) vertices. Returned sorted.
/// Throws std::invalid_argument on an empty member (unhittable).
std::vector<Vertex> hitting_set(Vertex n, const SetFamily& family);

}  // namespace stripspan

#endif  // STRIPSPAN_HITTING_SET_HPP_
