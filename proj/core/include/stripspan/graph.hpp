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

#ifndef STRIPSPAN_GRAPH_HPP_
#define STRIPSPAN_GRAPH_HPP_

#include <cstddef>
#include <span>
#include <vector>

#include "stripspan/types.hpp"

namespace stripspan {

/// Immutable, unweighted, undirected simple graph. Vertex ids are 0..n-1,
/// adjacency lists are sorted ascending, and the edge list is sorted; two
/// graphs built from the same input compare and iterate identically.
/// Safe for concurrent reads after construction.
class Graph {
 public:
  Graph() = default;

  /// Builds from an arbitrary pair list: self-loops are rejected, duplicate
  /// and reversed pairs are deduplicated, out-of-range endpoints throw.
  static Graph from_edges(Vertex n, std::vector<Edge> edges);

  Vertex vertex_count() const { return n_; }
  std::size_t edge_count() const { return edges_.size(); }

  /// Sorted, deduplicated edge list (u < v).
  const std::vector<Edge>& edges() const { return edges_; }

  /// Neighbors of u in ascending order.
  std::span<const Vertex> neighbors(Vertex u) const {
    return {adjacency_.data() + offsets_[u],
            adjacency_.data() + offsets_[u + 1]};
  }

  int degree(Vertex u) const {
    return static_cast<int>(offsets_[u + 1] - offsets_[u]);
  }

  bool has_edge(Vertex a, Vertex b) const;

  /// Throws std::invalid_argument unless 0 <= u < n.
  void check_vertex(Vertex u) const;

 private:
  Vertex n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::size_t> offsets_{0};
  std::vector<Vertex> adjacency_;
};

/// Exact unweighted shortest-path hop count, or kUnreachable.
int distance(const Graph& g, Vertex u, Vertex v);

/// One BFS row: hop counts from u to every vertex (kUnreachable where none).
std::vector<int> all_distances_from(const Graph& g, Vertex u);

/// Connected-component id per vertex, numbered by smallest contained vertex
/// in ascending order (component of vertex 0 is id 0, and so on).
std::vector<int> component_ids(const Graph& g);

}  // namespace stripspan

#endif  // STRIPSPAN_GRAPH_HPP_
