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

#include "stripspan/verification.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <queue>
#include <random>
#include <sstream>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "json.hpp"

#include "stripspan/bounds.hpp"
#include "stripspan/canonical.hpp"
#include "stripspan/constructions.hpp"
#include "stripspan/util.hpp"

namespace stripspan {

namespace {

void bfs_adj(const std::vector<std::vector<Vertex>>& adj, Vertex s,
             std::vector<int>& dist) {
  dist.assign(adj.size(), kUnreachable);
  std::vector<Vertex> queue;
  queue.reserve(adj.size());
  dist[s] = 0;
  queue.push_back(s);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Vertex x = queue[head];
    for (Vertex y : adj[x]) {
      if (dist[y] != kUnreachable) continue;
      dist[y] = dist[x] + 1;
      queue.push_back(y);
    }
  }
}

}  // namespace

DistanceMatrix apsp_oracle(const Graph& g, Vertex cap) {
  const Vertex n = g.vertex_count();
  if (n > cap) {
    throw std::invalid_argument("apsp_oracle: n=" + std::to_string(n) +
                                " exceeds memory cap " + std::to_string(cap));
  }
  DistanceMatrix m(n);
  parallel_for(static_cast<std::size_t>(n), [&](std::size_t u) {
    const std::vector<int> row = all_distances_from(g, static_cast<Vertex>(u));
    for (Vertex v = 0; v < n; ++v) m.at(static_cast<Vertex>(u), v) = row[v];
  });
  return m;
}

ArtifactDistances::ArtifactDistances(const Graph& g, const SparseArtifact& a)
    : n_(g.vertex_count()) {
  if (a.n != g.vertex_count()) {
    throw std::invalid_argument("artifact vertex count does not match graph");
  }
  if (a.subgraph_edges.size() != a.edge_sources.size()) {
    throw std::invalid_argument("artifact edge tags misaligned");
  }
  full_adjacency_.assign(n_, {});
  base_adjacency_.assign(n_, {});
  for (std::size_t i = 0; i < a.subgraph_edges.size(); ++i) {
    const Edge& e = a.subgraph_edges[i];
    if (!g.has_edge(e.u, e.v)) {
      throw std::invalid_argument("artifact edge (" + std::to_string(e.u) + "," +
                                  std::to_string(e.v) + ") is not in the graph");
    }
    full_adjacency_[e.u].push_back(e.v);
    full_adjacency_[e.v].push_back(e.u);
    if (a.edge_sources[i] != EdgeSource::kSubsetspan) {
      base_adjacency_[e.u].push_back(e.v);
      base_adjacency_[e.v].push_back(e.u);
    }
  }
  if (!a.weighted_edges.empty()) {
    shortcut_adjacency_.assign(n_, {});
    for (const WeightedEdge& e : a.weighted_edges) {
      g.check_vertex(e.u);
      g.check_vertex(e.v);
      if (e.weight < 1) {
        throw std::invalid_argument("shortcut weight must be positive");
      }
      shortcut_adjacency_[e.u].push_back({e.v, e.weight});
      shortcut_adjacency_[e.v].push_back({e.u, e.weight});
    }
  }
}

std::vector<int> ArtifactDistances::row(Vertex source) const {
  if (shortcut_adjacency_.empty()) {
    std::vector<int> dist;
    bfs_adj(full_adjacency_, source, dist);
    return dist;
  }
  // Dijkstra over unit subgraph edges plus weighted shortcuts.
  std::vector<int> dist(n_, kUnreachable);
  using Item = std::pair<int, Vertex>;
  std::priority_queue<Item, std::vector<Item>, std::greater<Item>> heap;
  dist[source] = 0;
  heap.push({0, source});
  while (!heap.empty()) {
    auto [d, x] = heap.top();
    heap.pop();
    if (d != dist[x]) continue;
    for (Vertex y : full_adjacency_[x]) {
      if (dist[y] == kUnreachable || d + 1 < dist[y]) {
        dist[y] = d + 1;
        heap.push({dist[y], y});
      }
    }
    for (const auto& [y, w] : shortcut_adjacency_[x]) {
      if (dist[y] == kUnreachable || d + w < dist[y]) {
        dist[y] = d + w;
        heap.push({dist[y], y});
      }
    }
  }
  return dist;
}

std::vector<int> ArtifactDistances::base_row(Vertex source) const {
  std::vector<int> dist;
  bfs_adj(base_adjacency_, source, dist);
  return dist;
}

namespace {

struct SourceTally {
  int max_err = 0;
  long long err_sum = 0;
  std::size_t pairs = 0;
  std::size_t disconnected = 0;
  std::unordered_map<int, long long> histogram;
  std::vector<DistortionReport::Violation> violations;
};

void tally_pair(SourceTally& t, Vertex u, Vertex v, int dg, int dh) {
  ++t.pairs;
  if (dh == kUnreachable) {
    ++t.disconnected;
    return;
  }
  const int err = dh - dg;
  if (err < 0) {
    t.violations.push_back({u, v, dg, dh});
    return;
  }
  t.max_err = std::max(t.max_err, err);
  t.err_sum += err;
  ++t.histogram[err];
}

DistortionReport merge_tallies(std::vector<SourceTally>& tallies,
                               VerifyMode mode, std::uint64_t seed,
                               std::size_t budget) {
  DistortionReport r;
  r.mode = mode;
  r.seed = seed;
  r.pair_budget = budget;
  std::map<int, long long> hist;
  long long sum = 0;
  for (SourceTally& t : tallies) {
    r.pair_count += t.pairs;
    r.artifact_disconnected_pairs += t.disconnected;
    r.max_additive_error = std::max(r.max_additive_error, t.max_err);
    sum += t.err_sum;
    for (const auto& [e, c] : t.histogram) hist[e] += c;
    r.violations.insert(r.violations.end(), t.violations.begin(),
                        t.violations.end());
  }
  const std::size_t counted =
      r.pair_count - r.artifact_disconnected_pairs - r.violations.size();
  r.mean_additive_error =
      counted == 0 ? 0.0 : static_cast<double>(sum) / static_cast<double>(counted);
  r.error_histogram.assign(hist.begin(), hist.end());
  return r;
}

}  // namespace

DistortionReport measure_distortion(const Graph& g, const SparseArtifact& a,
                                    const VerifyOptions& options) {
  const ArtifactDistances dist(g, a);
  const Vertex n = g.vertex_count();

  if (options.mode == VerifyMode::kExact) {
    std::vector<SourceTally> tallies(n);
    parallel_for(static_cast<std::size_t>(n), [&](std::size_t ui) {
      const Vertex u = static_cast<Vertex>(ui);
      const std::vector<int> row_g = all_distances_from(g, u);
      const std::vector<int> row_h = dist.row(u);
      SourceTally& t = tallies[ui];
      for (Vertex v = u + 1; v < n; ++v) {
        if (row_g[v] == kUnreachable) continue;
        tally_pair(t, u, v, row_g[v], row_h[v]);
      }
    });
    return merge_tallies(tallies, VerifyMode::kExact, 0, 0);
  }

  // Sampled mode: uniform connected pairs, deduplicated, grouped by source.
  const std::vector<int> comp = component_ids(g);
  std::vector<Vertex> comp_size(n == 0 ? 0 : n, 0);
  for (Vertex v = 0; v < n; ++v) ++comp_size[comp[v]];
  bool any_pair = false;
  for (Vertex v = 0; v < n; ++v) {
    if (comp_size[comp[v]] > 1) {
      any_pair = true;
      break;
    }
  }
  std::vector<std::pair<Vertex, Vertex>> pairs;
  if (any_pair) {
    std::mt19937_64 rng(options.seed);
    std::size_t attempts = 0;
    const std::size_t max_attempts = options.pair_budget * 64 + 1024;
    while (pairs.size() < options.pair_budget && attempts < max_attempts) {
      ++attempts;
      const Vertex u = static_cast<Vertex>(rng() % n);
      const Vertex v = static_cast<Vertex>(rng() % n);
      if (u == v || comp[u] != comp[v]) continue;
      pairs.emplace_back(u, v);
    }
  }
  std::sort(pairs.begin(), pairs.end());
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());

  std::vector<Vertex> sources;
  for (const auto& [u, v] : pairs) {
    if (sources.empty() || sources.back() != u) sources.push_back(u);
  }
  std::vector<SourceTally> tallies(sources.size());
  parallel_for(sources.size(), [&](std::size_t si) {
    const Vertex u = sources[si];
    const std::vector<int> row_g = all_distances_from(g, u);
    const std::vector<int> row_h = dist.row(u);
    SourceTally& t = tallies[si];
    auto it = std::lower_bound(pairs.begin(), pairs.end(),
                               std::make_pair(u, Vertex{-1}));
    for (; it != pairs.end() && it->first == u; ++it) {
      tally_pair(t, u, it->second, row_g[it->second], row_h[it->second]);
    }
  });
  return merge_tallies(tallies, VerifyMode::kSampled, options.seed,
                       options.pair_budget);
}

std::string to_json(const DistortionReport& r) {
  nlohmann::json j;
  j["pair_count"] = r.pair_count;
  j["max_additive_error"] = r.max_additive_error;
  j["mean_additive_error"] = r.mean_additive_error;
  auto hist = nlohmann::json::array();
  for (const auto& [e, c] : r.error_histogram) {
    hist.push_back(nlohmann::json::array({e, c}));
  }
  j["error_histogram"] = std::move(hist);
  auto viol = nlohmann::json::array();
  for (const auto& v : r.violations) {
    viol.push_back(nlohmann::json::array({v.u, v.v, v.dist_g, v.dist_h}));
  }
  j["violations"] = std::move(viol);
  j["artifact_disconnected_pairs"] = r.artifact_disconnected_pairs;
  j["mode"] = r.mode == VerifyMode::kExact ? "exact" : "sampled";
  if (r.mode == VerifyMode::kSampled) {
    j["seed"] = r.seed;
    j["pair_budget"] = r.pair_budget;
  }
  return j.dump();
}

namespace {

/// Distinct strips that share a vertex with the path or share a cluster that
/// has a vertex on the path; this is the count the detour construction can
/// actually consume, one strip per departure.
int strips_within_reach(const StripSet& ss, const Clustering& c,
                        const std::vector<std::vector<std::int32_t>>& cluster_strips,
                        const Path& p) {
  std::unordered_set<std::int32_t> near;
  for (Vertex v : p.vertices) {
    for (std::int32_t s : ss.strips_at_vertex[v]) near.insert(s);
    const std::int32_t cid = c.membership[v];
    if (cid >= 0) {
      for (std::int32_t s : cluster_strips[cid]) near.insert(s);
    }
  }
  return static_cast<int>(near.size());
}

struct PathSideAudit {
  bool crossed = false;
  bool hit = false;
  Vertex t = -1;
  Vertex w = -1;
  int dist_tw = 0;
  int w_index = 0;  // position of w along the walked path
};

}  // namespace

AuditReport audit_lemmas(const Graph& g, const TieBreakWeights& tb,
                         const Clustering& c, const StripSet& ss,
                         const SparseArtifact& a, const AuditOptions& options) {
  AuditReport report;
  const Vertex n = g.vertex_count();
  const int L = log2_ceil(n);
  report.edge_cases = ss.edge_cases;
  report.strip_edge_budget = strip_edge_budget(ss, c);
  report.strip_count = ss.strip_count();
  report.clean_cluster_count = ss.clean_cluster_count();

  auto record = [&](const std::string& msg) {
    if (report.violations.size() < options.max_recorded_violations) {
      report.violations.push_back(msg);
    }
  };

  std::unique_ptr<ArtifactDistances> dist;
  try {
    dist = std::make_unique<ArtifactDistances>(g, a);
  } catch (const std::invalid_argument& e) {
    report.subgraph_ok = false;
    record(std::string("artifact rejected: ") + e.what());
    return report;
  }

  // Shortcut weights must equal true distances.
  {
    Vertex current = -1;
    std::vector<int> row;
    for (const WeightedEdge& e : a.weighted_edges) {
      if (e.u != current) {
        row = all_distances_from(g, e.u);
        current = e.u;
      }
      if (row[e.v] != e.weight) {
        report.weights_exact = false;
        record("shortcut (" + std::to_string(e.u) + "," + std::to_string(e.v) +
               ") weight " + std::to_string(e.weight) + " != distance " +
               std::to_string(row[e.v]));
      }
    }
  }

  std::vector<std::vector<std::int32_t>> cluster_strips(c.cluster_count());
  for (std::int32_t s = 0; s < ss.strip_count(); ++s) {
    for (Vertex v : ss.strips[s].vertices) {
      const std::int32_t cid = c.membership[v];
      if (cid >= 0) cluster_strips[cid].push_back(s);
    }
  }
  for (auto& list : cluster_strips) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
  }

  // Seeded sample of connected pairs.
  const std::vector<int> comp = component_ids(g);
  std::vector<std::pair<Vertex, Vertex>> pairs;
  {
    std::mt19937_64 rng(options.seed);
    std::size_t attempts = 0;
    const std::size_t max_attempts = options.pair_budget * 64 + 1024;
    while (pairs.size() < options.pair_budget && attempts < max_attempts) {
      ++attempts;
      const Vertex u = static_cast<Vertex>(rng() % std::max<Vertex>(1, n));
      const Vertex v = static_cast<Vertex>(rng() % std::max<Vertex>(1, n));
      if (u >= v || comp[u] != comp[v]) continue;
      pairs.emplace_back(u, v);
    }
    std::sort(pairs.begin(), pairs.end());
    pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
  }

  const bool has_thresholds = a.schedule.clean_threshold > 0;
  const double final_bound = distortion_bound(a.schedule.kind, n, a.schedule.epsilon);
  const int beta_tt =
      a.kind == ArtifactKind::kEmulator ? 0 : 2 * L;

  // Cached rows for hitting-set vertices touched by segment checks.
  std::unordered_map<Vertex, std::vector<int>> t_rows_g;
  std::unordered_map<Vertex, std::vector<int>> t_rows_h;
  auto g_row_of = [&](Vertex t) -> const std::vector<int>& {
    auto it = t_rows_g.find(t);
    if (it == t_rows_g.end()) {
      it = t_rows_g.emplace(t, all_distances_from(g, t)).first;
    }
    return it->second;
  };
  auto h_row_of = [&](Vertex t) -> const std::vector<int>& {
    auto it = t_rows_h.find(t);
    if (it == t_rows_h.end()) it = t_rows_h.emplace(t, dist->row(t)).first;
    return it->second;
  };

  // Multi-source BFS in g from the prefix vertices, tracking which prefix
  // vertex each reached vertex is closest to (earliest prefix vertex wins).
  std::vector<int> ms_dist(n);
  std::vector<Vertex> ms_origin(n);
  auto closest_on_prefix = [&](const std::vector<Vertex>& prefix) {
    std::fill(ms_dist.begin(), ms_dist.end(), kUnreachable);
    std::vector<Vertex> queue;
    for (Vertex p : prefix) {
      ms_dist[p] = 0;
      ms_origin[p] = p;
      queue.push_back(p);
    }
    for (std::size_t head = 0; head < queue.size(); ++head) {
      Vertex x = queue[head];
      for (Vertex y : g.neighbors(x)) {
        if (ms_dist[y] != kUnreachable) continue;
        ms_dist[y] = ms_dist[x] + 1;
        ms_origin[y] = ms_origin[x];
        queue.push_back(y);
      }
    }
  };

  auto audit_side = [&](const Path& walked, Vertex s_from,
                        Vertex s_to) -> PathSideAudit {
    PathSideAudit side;
    auto crossing = find_threshold_crossing(ss, c, walked,
                                            a.schedule.strip_threshold,
                                            a.schedule.clean_threshold);
    if (!crossing) return side;
    side.crossed = true;
    ++report.crossing_pairs;
    std::vector<Vertex> q;
    if (crossing->strip_type) {
      q = strip_two_neighborhood(g, ss, crossing->strip_ids);
    } else {
      q.assign(walked.vertices.begin(),
               walked.vertices.begin() + crossing->prefix_index + 1);
      std::sort(q.begin(), q.end());
    }
    std::vector<Vertex> in_t;
    std::set_intersection(q.begin(), q.end(), a.hitting_set.begin(),
                          a.hitting_set.end(), std::back_inserter(in_t));
    if (in_t.empty()) {
      ++report.qset_unhit;
      record("pair (" + std::to_string(s_from) + "," + std::to_string(s_to) +
             "): hitting set misses its Q set of size " + std::to_string(q.size()));
      return side;
    }
    const std::vector<Vertex> prefix(walked.vertices.begin(),
                                     walked.vertices.begin() +
                                         crossing->prefix_index + 1);
    closest_on_prefix(prefix);
    Vertex best = -1;
    for (Vertex t : in_t) {
      if (ms_dist[t] == kUnreachable) continue;
      if (best == -1 || ms_dist[t] < ms_dist[best]) best = t;
    }
    if (best == -1) {
      ++report.qset_unhit;
      record("pair (" + std::to_string(s_from) + "," + std::to_string(s_to) +
             "): no hitting-set vertex reaches the prefix");
      return side;
    }
    side.hit = true;
    side.t = best;
    side.w = ms_origin[best];
    side.dist_tw = ms_dist[best];
    for (std::size_t i = 0; i < prefix.size(); ++i) {
      if (prefix[i] == side.w) {
        side.w_index = static_cast<int>(i);
        break;
      }
    }
    const int d_bound = a.schedule.d == kUnboundedLength ? n : a.schedule.d;
    if (side.dist_tw > d_bound + 2) {
      ++report.tw_distance_violations;
      record("pair (" + std::to_string(s_from) + "," + std::to_string(s_to) +
             "): dist(t=" + std::to_string(side.t) + ", w=" +
             std::to_string(side.w) + ") = " + std::to_string(side.dist_tw) +
             " > d+2 = " + std::to_string(d_bound + 2));
    }
    // Prefix segment: the walk up to w stayed under both thresholds, so the
    // base subgraph must span it with the detour-accounting error.
    Path to_w;
    to_w.vertices.assign(walked.vertices.begin(),
                         walked.vertices.begin() + side.w_index + 1);
    const auto [s_hit, c_hit] = path_stats(ss, c, to_w);
    const int near = strips_within_reach(ss, c, cluster_strips, to_w);
    const int k_seg = std::max(std::max(s_hit, near), c_hit);
    const std::vector<int> base_from = dist->base_row(s_from);
    const int dg_sw = side.w_index;  // geodesic position
    const int dh_sw = base_from[side.w];
    if (dh_sw == kUnreachable ||
        dh_sw - dg_sw > 16LL * k_seg * L) {
      ++report.prefix_segment_violations;
      record("pair (" + std::to_string(s_from) + "," + std::to_string(s_to) +
             "): base distance to w exceeds budget: " +
             (dh_sw == kUnreachable ? std::string("unreachable")
                                    : std::to_string(dh_sw - dg_sw)) +
             " > 16*" + std::to_string(k_seg) + "*" + std::to_string(L));
    }
    return side;
  };

  Vertex current_source = -1;
  std::unique_ptr<ShortestPathTree> tree;
  std::vector<int> row_g, base_u, full_u;
  for (const auto& [u, v] : pairs) {
    if (u != current_source) {
      tree = std::make_unique<ShortestPathTree>(build_canonical_tree(g, tb, u));
      row_g = all_distances_from(g, u);
      base_u = dist->base_row(u);
      full_u = dist->row(u);
      current_source = u;
    }
    ++report.pairs_audited;
    const Path path = path_from_tree(*tree, v);
    const auto [strips_hit, clean_hit] = path_stats(ss, c, path);
    const int near = strips_within_reach(ss, c, cluster_strips, path);
    const int dg = row_g[v];

    // Detour accounting on the base subgraph.
    ++report.lemma3_checked;
    const int k3 = std::max(near, clean_hit);
    report.max_k3 = std::max(report.max_k3, k3);
    if (base_u[v] == kUnreachable || base_u[v] - dg > 16LL * k3 * L) {
      ++report.lemma3_violations;
      record("pair (" + std::to_string(u) + "," + std::to_string(v) +
             "): base error " +
             (base_u[v] == kUnreachable ? std::string("unreachable")
                                        : std::to_string(base_u[v] - dg)) +
             " > 16*k*log with k=" + std::to_string(k3));
    } else {
      report.max_base_error = std::max(report.max_base_error, base_u[v] - dg);
    }

    // Length bound for paths rich in clean clusters but poor in strips. The
    // section argument needs at least one full block of m clean clusters, so
    // pairs with fewer than m stay out of the regime.
    if (ss.d != kUnboundedLength && clean_hit >= ss.m &&
        2 * strips_hit < clean_hit) {
      ++report.lemma4_checked;
      if (2LL * ss.m * dg < static_cast<long long>(clean_hit) * ss.d) {
        ++report.lemma4_violations;
        record("pair (" + std::to_string(u) + "," + std::to_string(v) +
               "): dist " + std::to_string(dg) + " < k*d/(2m) with k=" +
               std::to_string(clean_hit) + " d=" + std::to_string(ss.d) +
               " m=" + std::to_string(ss.m));
      }
    }

    if (has_thresholds) {
      PathSideAudit side_u = audit_side(path, u, v);
      Path reversed;
      reversed.vertices.assign(path.vertices.rbegin(), path.vertices.rend());
      PathSideAudit side_v = audit_side(reversed, v, u);
      if (side_u.hit && side_v.hit) {
        const int dg_tt = g_row_of(side_u.t)[side_v.t];
        const int dh_tt = h_row_of(side_u.t)[side_v.t];
        if (dg_tt != kUnreachable &&
            (dh_tt == kUnreachable || dh_tt - dg_tt > beta_tt)) {
          ++report.tt_shortcut_violations;
          record("pair (" + std::to_string(u) + "," + std::to_string(v) +
                 "): hitting-set detour t-t error " +
                 (dh_tt == kUnreachable ? std::string("unreachable")
                                        : std::to_string(dh_tt - dg_tt)) +
                 " > " + std::to_string(beta_tt));
        }
      }
    }

    // Final distortion for this pair against the pinned bound.
    if (full_u[v] == kUnreachable ||
        static_cast<double>(full_u[v] - dg) > final_bound) {
      ++report.final_bound_violations;
      record("pair (" + std::to_string(u) + "," + std::to_string(v) +
             "): distortion " +
             (full_u[v] == kUnreachable ? std::string("unreachable")
                                        : std::to_string(full_u[v] - dg)) +
             " exceeds bound " + std::to_string(final_bound));
    } else {
      report.max_pair_error = std::max(report.max_pair_error, full_u[v] - dg);
    }
  }
  return report;
}

std::string to_json(const AuditReport& r) {
  nlohmann::json j;
  j["pairs_audited"] = r.pairs_audited;
  j["lemma3_checked"] = r.lemma3_checked;
  j["lemma3_violations"] = r.lemma3_violations;
  j["max_base_error"] = r.max_base_error;
  j["max_k"] = r.max_k3;
  j["lemma4_checked"] = r.lemma4_checked;
  j["lemma4_violations"] = r.lemma4_violations;
  j["crossing_pairs"] = r.crossing_pairs;
  j["qset_unhit"] = r.qset_unhit;
  j["tw_distance_violations"] = r.tw_distance_violations;
  j["tt_shortcut_violations"] = r.tt_shortcut_violations;
  j["prefix_segment_violations"] = r.prefix_segment_violations;
  j["final_bound_violations"] = r.final_bound_violations;
  j["max_pair_error"] = r.max_pair_error;
  j["subgraph_ok"] = r.subgraph_ok;
  j["weights_exact"] = r.weights_exact;
  j["strip_edge_cases"] = {
      {"both_unclustered", r.edge_cases.both_unclustered},
      {"new_vertex", r.edge_cases.new_vertex},
      {"between_strips", r.edge_cases.between_strips},
      {"repeated", r.edge_cases.repeated},
  };
  j["strip_edge_budget"] = r.strip_edge_budget;
  j["strip_count"] = r.strip_count;
  j["clean_cluster_count"] = r.clean_cluster_count;
  j["q_min_size"] = r.q_min_size;
  j["violations"] = r.violations;
  j["clean"] = r.clean();
  return j.dump();
}

}  // namespace stripspan
