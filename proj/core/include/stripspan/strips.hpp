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

#ifndef STRIPSPAN_STRIPS_HPP_
#define STRIPSPAN_STRIPS_HPP_

#include <cstdint>
#include <limits>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "stripspan/canonical.hpp"
#include "stripspan/clustering.hpp"
#include "stripspan/graph.hpp"
#include "stripspan/tiebreak.hpp"
#include "stripspan/types.hpp"

namespace stripspan {

/// Length-bound sentinel: strips of any hop length are admissible.
inline constexpr int kUnboundedLength = std::numeric_limits<int>::max();

/// Conditions that held when a strip was inserted; kept for audits.
struct StripInsertion {
  int strips_hit = 0;   // distinct existing strips the path intersected
  int clean_hit = 0;    // distinct then-clean clusters (always == m)
  int length = 0;       // hop count
};

/// Ordered set of strips (canonical shortest paths) plus the bookkeeping the
/// constructions and audits consume. Frozen after create_strips returns;
/// reads are thread-safe.
struct StripSet {
  int d = kUnboundedLength;
  int m = 1;
  std::vector<Path> strips;
  /// Strip indices containing each vertex, in insertion order.
  std::vector<std::vector<std::int32_t>> strips_at_vertex;
  /// Per cluster: true iff no strip vertex lies in the cluster.
  std::vector<std::uint8_t> clean;
  std::vector<StripInsertion> insertions;
  /// Distinct strip edges in first-seen order.
  std::vector<Edge> edges;
  std::unordered_set<std::uint64_t> edge_keys;

  /// New-edge classification counts mirroring the four accounting cases:
  /// both endpoints unclustered / first strip edge at an endpoint / bridges
  /// two existing strips / already present.
  struct EdgeCases {
    std::size_t both_unclustered = 0;
    std::size_t new_vertex = 0;
    std::size_t between_strips = 0;
    std::size_t repeated = 0;
  } edge_cases;

  int strip_count() const { return static_cast<int>(strips.size()); }
  int clean_cluster_count() const;
  bool contains_edge(Vertex a, Vertex b) const {
    return edge_keys.count(edge_key(a, b)) > 0;
  }
};

/// Greedy fixpoint of the strip-insertion rule. Ordered pairs (u, v) are
/// scanned lexicographically; the walk along rho(u, v) from u is cut at the
/// first vertex x whose prefix touches exactly m distinct clean clusters, and
/// the prefix becomes a strip iff it is at most d hops long and intersects at
/// most m existing strips. Every insertion updates the clean flags and
/// restarts the scan. At return no canonical path of length <= d intersecting
/// <= m strips touches >= m clean clusters.
StripSet create_strips(const Graph& g, const TieBreakWeights& tb,
                       const Clustering& c, int d, int m);

/// (distinct strips sharing a vertex with p, distinct currently-clean
/// clusters sharing a vertex with p). Empty path yields (0, 0).
std::pair<int, int> path_stats(const StripSet& ss, const Clustering& c,
                               const Path& p);

/// Distinct strip edges incident to at least one clustered vertex.
std::size_t strip_edge_budget(const StripSet& ss, const Clustering& c);

/// {"d": int|"inf", "m": int, "strips": [[vertex ids]]}
std::string to_json(const StripSet& ss);

}  // namespace stripspan

#endif  // STRIPSPAN_STRIPS_HPP_
