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

#ifndef STRIPSPAN_VERIFICATION_HPP_
#define STRIPSPAN_VERIFICATION_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "stripspan/artifact.hpp"
#include "stripspan/clustering.hpp"
#include "stripspan/graph.hpp"
#include "stripspan/strips.hpp"
#include "stripspan/tiebreak.hpp"

namespace stripspan {

/// Exact all-pairs hop distances; kUnreachable marks disconnected pairs.
class DistanceMatrix {
 public:
  DistanceMatrix(Vertex n) : n_(n), data_(static_cast<std::size_t>(n) * n) {}

  int at(Vertex u, Vertex v) const { return data_[index(u, v)]; }
  int& at(Vertex u, Vertex v) { return data_[index(u, v)]; }
  Vertex size() const { return n_; }

 private:
  std::size_t index(Vertex u, Vertex v) const {
    return static_cast<std::size_t>(u) * n_ + v;
  }
  Vertex n_;
  std::vector<std::int32_t> data_;
};

/// Ground truth for all acceptance checks. Refuses n above the memory cap.
DistanceMatrix apsp_oracle(const Graph& g, Vertex cap = 5000);

/// Distances inside an artifact: unit weights on subgraph edges plus the
/// stored weights on emulator shortcuts. Rows are independent and safe to
/// compute concurrently.
class ArtifactDistances {
 public:
  /// Validates that the artifact matches g (same n, subgraph edges present
  /// in g); throws std::invalid_argument otherwise.
  ArtifactDistances(const Graph& g, const SparseArtifact& a);

  /// Distance row over the full artifact (kUnreachable where none).
  std::vector<int> row(Vertex source) const;
  /// Distance row over the base subgraph only: multspan, strip, and
  /// unclustered edges (no subset-spanner edges, no shortcuts).
  std::vector<int> base_row(Vertex source) const;

  bool has_shortcuts() const { return !shortcut_adjacency_.empty(); }

 private:
  Vertex n_;
  std::vector<std::vector<Vertex>> full_adjacency_;
  std::vector<std::vector<Vertex>> base_adjacency_;
  std::vector<std::vector<std::pair<Vertex, int>>> shortcut_adjacency_;
};

enum class VerifyMode { kExact, kSampled };

struct DistortionReport {
  std::size_t pair_count = 0;
  int max_additive_error = 0;
  double mean_additive_error = 0.0;
  std::vector<std::pair<int, long long>> error_histogram;  // (error, count)
  struct Violation {
    Vertex u, v;
    int dist_g, dist_h;
  };
  std::vector<Violation> violations;  // dist_h < dist_g; must be empty
  /// Pairs connected in g but not in the artifact (infinite distortion).
  std::size_t artifact_disconnected_pairs = 0;
  VerifyMode mode = VerifyMode::kExact;
  std::uint64_t seed = 0;      // sampled mode
  std::size_t pair_budget = 0; // sampled mode

  bool clean() const {
    return violations.empty() && artifact_disconnected_pairs == 0;
  }
};

struct VerifyOptions {
  VerifyMode mode = VerifyMode::kExact;
  std::size_t pair_budget = 20000;
  std::uint64_t seed = 2026;
};

/// Compares artifact distances against the graph for every connected pair
/// (exact mode) or a seeded uniform sample of connected pairs.
DistortionReport measure_distortion(const Graph& g, const SparseArtifact& a,
                                    const VerifyOptions& options);

std::string to_json(const DistortionReport& r);

/// One audited pair; kept verbatim when a check fails.
struct AuditOptions {
  std::size_t pair_budget = 2000;
  std::uint64_t seed = 977;
  std::size_t max_recorded_violations = 64;
};

struct AuditReport {
  std::size_t pairs_audited = 0;

  // Detour accounting on the base subgraph: error <= 16 k ceil(log2 n) with
  // k = max(clean clusters hit, strips within reach of the path).
  std::size_t lemma3_checked = 0;
  std::size_t lemma3_violations = 0;
  int max_base_error = 0;
  int max_k3 = 0;

  // Length bound: paths with k >= m clean clusters and fewer than k/2 strips
  // are at least k d / (2 m) long. Only meaningful for bounded d.
  std::size_t lemma4_checked = 0;
  std::size_t lemma4_violations = 0;

  // Threshold-crossing pairs: hitting-set coverage and segment inequalities.
  std::size_t crossing_pairs = 0;
  std::size_t qset_unhit = 0;
  std::size_t tw_distance_violations = 0;   // dist_g(t, w) > d + 2
  std::size_t tt_shortcut_violations = 0;   // dist_h(t, t') too large
  std::size_t prefix_segment_violations = 0;
  std::size_t final_bound_violations = 0;
  int max_pair_error = 0;

  bool subgraph_ok = true;     // every artifact edge exists in g
  bool weights_exact = true;   // shortcut weights equal oracle distances

  StripSet::EdgeCases edge_cases;
  std::size_t strip_edge_budget = 0;
  int strip_count = 0;
  int clean_cluster_count = 0;
  std::size_t q_min_size = 0;

  std::vector<std::string> violations;

  bool clean() const {
    return lemma3_violations == 0 && lemma4_violations == 0 && qset_unhit == 0 &&
           tw_distance_violations == 0 && tt_shortcut_violations == 0 &&
           prefix_segment_violations == 0 && final_bound_violations == 0 &&
           subgraph_ok && weights_exact;
  }
};

/// Re-derives the per-pair classification used by the constructions on a
/// seeded sample of connected pairs and checks each regime's explicit-constant
/// bound, recording violated instances verbatim.
AuditReport audit_lemmas(const Graph& g, const TieBreakWeights& tb,
                         const Clustering& c, const StripSet& ss,
                         const SparseArtifact& a,
                         const AuditOptions& options = {});

std::string to_json(const AuditReport& r);

}  // namespace stripspan

#endif  // STRIPSPAN_VERIFICATION_HPP_
