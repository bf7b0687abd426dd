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

#ifndef STRIPSPAN_TYPES_HPP_
#define STRIPSPAN_TYPES_HPP_

#include <compare>
#include <cstdint>
#include <vector>

namespace stripspan {

using Vertex = std::int32_t;

/// Marker for "no path" in hop-distance arrays.
inline constexpr int kUnreachable = -1;

/// Undirected edge, stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

inline Edge make_edge(Vertex a, Vertex b) {
  return a < b ? Edge{a, b} : Edge{b, a};
}

/// Packs a normalized edge into one 64-bit key for hashing.
inline std::uint64_t edge_key(const Edge& e) {
  return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(e.u)) << 32) |
         static_cast<std::uint64_t>(static_cast<std::uint32_t>(e.v));
}

inline std::uint64_t edge_key(Vertex a, Vertex b) {
  return edge_key(make_edge(a, b));
}

/// Simple vertex path; consecutive vertices are adjacent in the host graph.
struct Path {
  std::vector<Vertex> vertices;

  bool empty() const { return vertices.empty(); }
  /// Hop count (edges); 0 for a single-vertex path.
  int length() const {
    return vertices.empty() ? 0 : static_cast<int>(vertices.size()) - 1;
  }

  friend bool operator==(const Path&, const Path&) = default;
};

}  // namespace stripspan

#endif  // STRIPSPAN_TYPES_HPP_
