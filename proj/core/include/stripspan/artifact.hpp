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

#ifndef STRIPSPAN_ARTIFACT_HPP_
#define STRIPSPAN_ARTIFACT_HPP_

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "stripspan/schedule.hpp"
#include "stripspan/types.hpp"

namespace stripspan {

enum class ArtifactKind { kSpanner, kEmulator };

/// Where a subgraph edge came from; the union is built in this priority
/// order and each edge keeps its first source, so per-source counts add up
/// to the total.
enum class EdgeSource : std::uint8_t {
  kMultspan = 0,
  kStrips = 1,
  kUnclustered = 2,
  kSubsetspan = 3,
};

inline constexpr std::array<const char*, 4> kEdgeSourceNames = {
    "multspan", "strips", "unclustered", "subsetspan"};

struct WeightedEdge {
  Vertex u = 0;
  Vertex v = 0;
  int weight = 0;

  friend auto operator<=>(const WeightedEdge&, const WeightedEdge&) = default;
};

/// Output of a construction: a subgraph edge set, plus exact-distance
/// shortcut edges for emulators, tagged with the schedule that produced it.
struct SparseArtifact {
  ArtifactKind kind = ArtifactKind::kSpanner;
  Vertex n = 0;
  double epsilon = 0.0;
  ParameterSchedule schedule;
  std::vector<Edge> subgraph_edges;       // sorted
  std::vector<EdgeSource> edge_sources;   // aligned with subgraph_edges
  std::vector<WeightedEdge> weighted_edges;  // sorted; emulator shortcuts
  std::vector<Vertex> hitting_set;        // sorted; empty for spanner1

  std::size_t total_edges() const {
    return subgraph_edges.size() + weighted_edges.size();
  }
  std::array<std::size_t, 4> source_counts() const;
};

std::string to_string(ArtifactKind kind);

/// Canonical JSON form:
/// {"kind","epsilon","n","subgraph_edges","weighted_edges",
///  "provenance_counts","hitting_set","schedule"} with sorted keys; two
/// builds with the same inputs serialize byte-identically.
std::string to_json(const SparseArtifact& a);
SparseArtifact artifact_from_json(std::string_view text);

/// Stable content hash of the canonical JSON form.
std::string artifact_hash(const SparseArtifact& a);

}  // namespace stripspan

#endif  // STRIPSPAN_ARTIFACT_HPP_
