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

#ifndef STRIPSPAN_CLUSTERING_HPP_
#define STRIPSPAN_CLUSTERING_HPP_

#include <string>
#include <vector>

#include "stripspan/graph.hpp"
#include "stripspan/types.hpp"

namespace stripspan {

/// Partial partition of the vertex set into radius-1 clusters of exactly e
/// vertices each. The center of a cluster is adjacent to every other member.
/// Immutable after construction; safe for concurrent reads.
struct Clustering {
  int e = 1;
  std::vector<std::vector<Vertex>> clusters;  // members sorted ascending
  std::vector<Vertex> centers;                // aligned with clusters
  std::vector<std::int32_t> membership;       // cluster index or -1

  int cluster_count() const { return static_cast<int>(clusters.size()); }
  bool is_clustered(Vertex v) const { return membership[v] >= 0; }
};

/// Greedy clustering: repeatedly turn an unmarked vertex with at least e-1
/// unmarked neighbors into a cluster (the vertex plus its e-1 lowest-id
/// unmarked neighbors). Candidates are scanned in ascending id; full passes
/// repeat until one adds nothing. e > n simply yields no clusters.
Clustering cluster(const Graph& g, int e);

/// Exact number of edges with both endpoints unclustered. Always <= n*e at
/// the fixpoint of cluster(). Throws if c was not built for g.
std::size_t unclustered_edge_count(const Graph& g, const Clustering& c);

/// {"e": int, "clusters": [[ids]], "centers": [ids]}
std::string to_json(const Clustering& c);

}  // namespace stripspan

#endif  // STRIPSPAN_CLUSTERING_HPP_
