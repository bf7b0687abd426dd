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

#ifndef STRIPSPAN_CONSTRUCTIONS_HPP_
#define STRIPSPAN_CONSTRUCTIONS_HPP_

#include <cstdint>
#include <optional>
#include <vector>

#include "stripspan/artifact.hpp"
#include "stripspan/clustering.hpp"
#include "stripspan/graph.hpp"
#include "stripspan/hitting_set.hpp"
#include "stripspan/schedule.hpp"
#include "stripspan/strips.hpp"
#include "stripspan/tiebreak.hpp"

namespace stripspan {

struct BuildStats {
  int cluster_count = 0;
  int strip_count = 0;
  std::size_t unclustered_edge_total = 0;  // both endpoints unclustered in G
  std::size_t strip_edge_budget = 0;       // strip edges touching a cluster
  std::size_t q_family_size = 0;           // after dedup
  std::size_t q_strip_type = 0;
  std::size_t q_path_type = 0;
  std::size_t q_min_size = 0;
  std::size_t hitting_set_size = 0;
  int subset_beta = 0;                     // measured by subset_spanner
  double subset_edge_constant = 0.0;
  double wall_ms = 0.0;
};

struct BuildResult {
  SparseArtifact artifact;
  BuildStats stats;
};

/// multspan + strips (d unbounded, m = ceil(n^((1-eps)/2))) + all edges
/// between unclustered vertices, for eps in [0, 1].
BuildResult build_spanner1(const Graph& g, const TieBreakWeights& tb,
                           double epsilon);

/// Shared first stage of the emulator and second-spanner builds: the base
/// subgraph, the strip set, the family Q collected from every ordered pair
/// whose canonical path crosses a threshold, and its hitting set.
struct StageResult {
  Clustering clustering;
  StripSet strips;
  std::vector<Edge> base_edges;            // sorted
  std::vector<EdgeSource> base_sources;    // aligned
  std::vector<std::vector<Vertex>> q_family;  // deduplicated, members sorted
  std::size_t q_strip_type = 0;            // pre-dedup tallies
  std::size_t q_path_type = 0;
  std::vector<Vertex> hitting;
};

StageResult build_strip_hitting_stage(const Graph& g, const TieBreakWeights& tb,
                                      const ParameterSchedule& sched);

/// Base plus an exact-distance shortcut edge for every hitting-set pair.
BuildResult build_emulator(const Graph& g, const TieBreakWeights& tb,
                           double epsilon);

/// Base plus subset_spanner(g, T).
BuildResult build_spanner2(const Graph& g, const TieBreakWeights& tb,
                           double epsilon);

BuildResult build(ConstructionKind kind, const Graph& g,
                  const TieBreakWeights& tb, double epsilon);

/// First vertex on p (walked from its front) where the prefix meets either
/// threshold, with the prefix's statistics at that vertex. Used by the
/// ordered-pair scan semantics and re-derived by audits.
struct ThresholdCrossing {
  Vertex x = -1;
  int prefix_index = 0;  // position of x within p
  bool strip_type = false;
  int strips_hit = 0;
  int clean_hit = 0;
  std::vector<std::int32_t> strip_ids;  // distinct strips met by the prefix
};

std::optional<ThresholdCrossing> find_threshold_crossing(
    const StripSet& ss, const Clustering& c, const Path& p,
    long long strip_threshold, long long clean_threshold);

/// Sorted list of vertices within hop distance <= 2 of any vertex of the
/// given strips.
std::vector<Vertex> strip_two_neighborhood(
    const Graph& g, const StripSet& ss,
    const std::vector<std::int32_t>& strip_ids);

}  // namespace stripspan

#endif  // STRIPSPAN_CONSTRUCTIONS_HPP_
