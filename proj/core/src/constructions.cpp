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

#include "stripspan/constructions.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <numeric>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "stripspan/multspan.hpp"
#include "stripspan/subset_spanner.hpp"
#include "stripspan/util.hpp"

namespace stripspan {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

/// Edge union with first-wins provenance.
class EdgeUnion {
 public:
  void add(const Edge& e, EdgeSource src) {
    if (keys_.insert(edge_key(e)).second) {
      edges_.push_back(e);
      sources_.push_back(src);
    }
  }

  void add_all(const std::vector<Edge>& edges, EdgeSource src) {
    for (const Edge& e : edges) add(e, src);
  }

  /// Moves the accumulated edges out, sorted, tags kept aligned.
  void finalize(std::vector<Edge>& edges, std::vector<EdgeSource>& sources) {
    std::vector<std::size_t> idx(edges_.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
      return edges_[a] < edges_[b];
    });
    edges.resize(edges_.size());
    sources.resize(edges_.size());
    for (std::size_t i = 0; i < idx.size(); ++i) {
      edges[i] = edges_[idx[i]];
      sources[i] = sources_[idx[i]];
    }
  }

 private:
  std::vector<Edge> edges_;
  std::vector<EdgeSource> sources_;
  std::unordered_set<std::uint64_t> keys_;
};

void add_unclustered_edges(const Graph& g, const Clustering& c, EdgeUnion& u) {
  for (const Edge& e : g.edges()) {
    if (!c.is_clustered(e.u) && !c.is_clustered(e.v)) {
      u.add(e, EdgeSource::kUnclustered);
    }
  }
}

std::uint64_t content_hash(const std::vector<Vertex>& sorted) {
  std::uint64_t h = 0x9e3779b97f4a7c15ULL;
  for (Vertex v : sorted) {
    h = splitmix64(h ^ static_cast<std::uint64_t>(static_cast<std::uint32_t>(v)));
  }
  return h;
}

/// Deduplicating accumulator for the family Q.
class FamilyBuilder {
 public:
  void add(std::vector<Vertex> member) {  // member must arrive sorted
    const std::uint64_t h = content_hash(member);
    auto [it, fresh] = buckets_.try_emplace(h);
    if (!fresh) {
      for (std::size_t i : it->second) {
        if (family_[i] == member) return;
      }
    }
    it->second.push_back(family_.size());
    family_.push_back(std::move(member));
  }

  std::vector<std::vector<Vertex>> take() { return std::move(family_); }

 private:
  std::vector<std::vector<Vertex>> family_;
  std::unordered_map<std::uint64_t, std::vector<std::size_t>> buckets_;
};

/// One source's threshold scan for the ordered-pair loop: depth-first over
/// the canonical tree, pruning below the first vertex whose prefix crosses a
/// threshold (all deeper pairs share that prefix and contribute the same Q).
struct StageScan {
  const Graph& g;
  const Clustering& c;
  const StripSet& ss;
  const ParameterSchedule& sched;
  FamilyBuilder& family;
  std::map<std::vector<std::int32_t>, std::vector<Vertex>>& strip_q_cache;
  std::size_t& strip_type_count;
  std::size_t& path_type_count;

  std::vector<int> cluster_visits;
  std::vector<int> strip_visits;
  std::vector<std::int32_t> strip_stack;  // distinct strips, first-met order
  std::vector<Vertex> path_stack;         // current root path
  int clean_cnt = 0;

  StageScan(const Graph& g_, const Clustering& c_, const StripSet& ss_,
            const ParameterSchedule& sched_, FamilyBuilder& fam,
            std::map<std::vector<std::int32_t>, std::vector<Vertex>>& cache,
            std::size_t& st_count, std::size_t& pt_count)
      : g(g_), c(c_), ss(ss_), sched(sched_), family(fam),
        strip_q_cache(cache), strip_type_count(st_count),
        path_type_count(pt_count), cluster_visits(c_.cluster_count(), 0),
        strip_visits(ss_.strip_count(), 0) {}

  struct Undo {
    int strips_pushed = 0;
  };

  Undo enter(Vertex v) {
    Undo undo;
    path_stack.push_back(v);
    const std::int32_t cid = c.membership[v];
    if (cid >= 0 && ss.clean[cid] && cluster_visits[cid]++ == 0) ++clean_cnt;
    for (std::int32_t s : ss.strips_at_vertex[v]) {
      if (strip_visits[s]++ == 0) {
        strip_stack.push_back(s);
        ++undo.strips_pushed;
      }
    }
    return undo;
  }

  void exit(Vertex v, const Undo& undo) {
    path_stack.pop_back();
    const std::int32_t cid = c.membership[v];
    if (cid >= 0 && ss.clean[cid] && --cluster_visits[cid] == 0) --clean_cnt;
    for (std::int32_t s : ss.strips_at_vertex[v]) --strip_visits[s];
    for (int i = 0; i < undo.strips_pushed; ++i) strip_stack.pop_back();
  }

  bool crossed() const {
    return static_cast<long long>(strip_stack.size()) >= sched.strip_threshold ||
           static_cast<long long>(clean_cnt) >= sched.clean_threshold;
  }

  void emit() {
    if (static_cast<long long>(strip_stack.size()) >= sched.strip_threshold) {
      ++strip_type_count;
      std::vector<std::int32_t> key(strip_stack);
      std::sort(key.begin(), key.end());
      auto it = strip_q_cache.find(key);
      if (it == strip_q_cache.end()) {
        it = strip_q_cache.emplace(key, strip_two_neighborhood(g, ss, key)).first;
      }
      family.add(it->second);
    } else {
      ++path_type_count;
      std::vector<Vertex> q(path_stack);
      std::sort(q.begin(), q.end());
      family.add(std::move(q));
    }
  }
};

void stage_scan_source(StageScan& scan, const ShortestPathTree& tree,
                       const TreeChildren& children) {
  struct Frame {
    Vertex v;
    std::size_t next_child;
    bool pruned;
    StageScan::Undo undo;
  };
  const Vertex source = tree.source;
  std::vector<Frame> stack;
  StageScan::Undo undo0 = scan.enter(source);
  bool pruned0 = scan.crossed();
  if (pruned0 && !children.of(source).empty()) {
    // A partner vertex exists below, so pairs starting here qualify.
    scan.emit();
  }
  stack.push_back({source, 0, pruned0, undo0});
  while (!stack.empty()) {
    Frame& f = stack.back();
    auto kids = children.of(f.v);
    if (f.pruned || f.next_child >= kids.size()) {
      scan.exit(f.v, f.undo);
      stack.pop_back();
      continue;
    }
    Vertex ch = kids[f.next_child++];
    StageScan::Undo undo = scan.enter(ch);
    bool limit = scan.crossed();
    if (limit) scan.emit();
    stack.push_back({ch, 0, limit, undo});
  }
}

}  // namespace

std::optional<ThresholdCrossing> find_threshold_crossing(
    const StripSet& ss, const Clustering& c, const Path& p,
    long long strip_threshold, long long clean_threshold) {
  std::unordered_set<std::int32_t> clusters;
  std::unordered_set<std::int32_t> strips;
  ThresholdCrossing tc;
  for (std::size_t i = 0; i < p.vertices.size(); ++i) {
    const Vertex v = p.vertices[i];
    const std::int32_t cid = c.membership[v];
    if (cid >= 0 && ss.clean[cid]) clusters.insert(cid);
    for (std::int32_t s : ss.strips_at_vertex[v]) {
      if (strips.insert(s).second) tc.strip_ids.push_back(s);
    }
    const bool strip_hit =
        static_cast<long long>(strips.size()) >= strip_threshold;
    const bool clean_hit =
        static_cast<long long>(clusters.size()) >= clean_threshold;
    if (strip_hit || clean_hit) {
      tc.x = v;
      tc.prefix_index = static_cast<int>(i);
      tc.strip_type = strip_hit;
      tc.strips_hit = static_cast<int>(strips.size());
      tc.clean_hit = static_cast<int>(clusters.size());
      std::sort(tc.strip_ids.begin(), tc.strip_ids.end());
      return tc;
    }
  }
  return std::nullopt;
}

std::vector<Vertex> strip_two_neighborhood(
    const Graph& g, const StripSet& ss,
    const std::vector<std::int32_t>& strip_ids) {
  std::vector<int> dist(g.vertex_count(), -1);
  std::vector<Vertex> queue;
  for (std::int32_t s : strip_ids) {
    for (Vertex v : ss.strips[s].vertices) {
      if (dist[v] == -1) {
        dist[v] = 0;
        queue.push_back(v);
      }
    }
  }
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Vertex x = queue[head];
    if (dist[x] == 2) break;
    for (Vertex y : g.neighbors(x)) {
      if (dist[y] != -1) continue;
      dist[y] = dist[x] + 1;
      queue.push_back(y);
    }
  }
  std::sort(queue.begin(), queue.end());
  return queue;
}

BuildResult build_spanner1(const Graph& g, const TieBreakWeights& tb,
                           double epsilon) {
  const auto start = Clock::now();
  const ParameterSchedule sched =
      schedule(ConstructionKind::kSpanner1, g.vertex_count(), epsilon);
  BuildResult r;
  r.artifact.kind = ArtifactKind::kSpanner;
  r.artifact.n = g.vertex_count();
  r.artifact.epsilon = epsilon;
  r.artifact.schedule = sched;

  EdgeUnion u;
  u.add_all(multspan(g, multspan_k(g.vertex_count())), EdgeSource::kMultspan);
  const Clustering c = cluster(g, sched.e);
  const StripSet ss = create_strips(g, tb, c, kUnboundedLength, sched.m);
  u.add_all(ss.edges, EdgeSource::kStrips);
  add_unclustered_edges(g, c, u);
  u.finalize(r.artifact.subgraph_edges, r.artifact.edge_sources);

  r.stats.cluster_count = c.cluster_count();
  r.stats.strip_count = ss.strip_count();
  r.stats.unclustered_edge_total = unclustered_edge_count(g, c);
  r.stats.strip_edge_budget = strip_edge_budget(ss, c);
  r.stats.wall_ms = ms_since(start);
  return r;
}

StageResult build_strip_hitting_stage(const Graph& g, const TieBreakWeights& tb,
                                      const ParameterSchedule& sched) {
  StageResult stage;
  stage.clustering = cluster(g, sched.e);
  stage.strips = create_strips(g, tb, stage.clustering, sched.d, sched.m);

  EdgeUnion u;
  u.add_all(multspan(g, multspan_k(g.vertex_count())), EdgeSource::kMultspan);
  u.add_all(stage.strips.edges, EdgeSource::kStrips);
  add_unclustered_edges(g, stage.clustering, u);
  u.finalize(stage.base_edges, stage.base_sources);

  FamilyBuilder family;
  std::map<std::vector<std::int32_t>, std::vector<Vertex>> strip_q_cache;
  for (Vertex src = 0; src < g.vertex_count(); ++src) {
    const ShortestPathTree tree = build_canonical_tree(g, tb, src);
    const TreeChildren children = tree_children(tree);
    StageScan scan(g, stage.clustering, stage.strips, sched, family,
                   strip_q_cache, stage.q_strip_type, stage.q_path_type);
    stage_scan_source(scan, tree, children);
  }
  stage.q_family = family.take();
  SetFamily fam;
  fam.members = stage.q_family;
  stage.hitting = hitting_set(g.vertex_count(), fam);
  return stage;
}

namespace {

void fill_stage_stats(const Graph& g, const StageResult& stage, BuildStats& s) {
  s.cluster_count = stage.clustering.cluster_count();
  s.strip_count = stage.strips.strip_count();
  s.unclustered_edge_total = unclustered_edge_count(g, stage.clustering);
  s.strip_edge_budget = strip_edge_budget(stage.strips, stage.clustering);
  s.q_family_size = stage.q_family.size();
  s.q_strip_type = stage.q_strip_type;
  s.q_path_type = stage.q_path_type;
  s.q_min_size = 0;
  for (const auto& q : stage.q_family) {
    if (s.q_min_size == 0 || q.size() < s.q_min_size) s.q_min_size = q.size();
  }
  s.hitting_set_size = stage.hitting.size();
}

}  // namespace

BuildResult build_emulator(const Graph& g, const TieBreakWeights& tb,
                           double epsilon) {
  const auto start = Clock::now();
  const ParameterSchedule sched =
      schedule(ConstructionKind::kEmulator, g.vertex_count(), epsilon);
  StageResult stage = build_strip_hitting_stage(g, tb, sched);

  BuildResult r;
  r.artifact.kind = ArtifactKind::kEmulator;
  r.artifact.n = g.vertex_count();
  r.artifact.epsilon = epsilon;
  r.artifact.schedule = sched;
  r.artifact.subgraph_edges = std::move(stage.base_edges);
  r.artifact.edge_sources = std::move(stage.base_sources);
  r.artifact.hitting_set = stage.hitting;

  for (std::size_t i = 0; i < stage.hitting.size(); ++i) {
    const Vertex t1 = stage.hitting[i];
    const std::vector<int> row = all_distances_from(g, t1);
    for (std::size_t j = i + 1; j < stage.hitting.size(); ++j) {
      const Vertex t2 = stage.hitting[j];
      if (row[t2] == kUnreachable) continue;
      r.artifact.weighted_edges.push_back({t1, t2, row[t2]});
    }
  }

  fill_stage_stats(g, stage, r.stats);
  r.stats.wall_ms = ms_since(start);
  return r;
}

BuildResult build_spanner2(const Graph& g, const TieBreakWeights& tb,
                           double epsilon) {
  const auto start = Clock::now();
  const ParameterSchedule sched =
      schedule(ConstructionKind::kSpanner2, g.vertex_count(), epsilon);
  StageResult stage = build_strip_hitting_stage(g, tb, sched);

  BuildResult r;
  r.artifact.kind = ArtifactKind::kSpanner;
  r.artifact.n = g.vertex_count();
  r.artifact.epsilon = epsilon;
  r.artifact.schedule = sched;
  r.artifact.hitting_set = stage.hitting;

  EdgeUnion u;
  for (std::size_t i = 0; i < stage.base_edges.size(); ++i) {
    u.add(stage.base_edges[i], stage.base_sources[i]);
  }
  const SubsetSpannerResult sub = subset_spanner(g, tb, stage.hitting);
  u.add_all(sub.edges, EdgeSource::kSubsetspan);
  u.finalize(r.artifact.subgraph_edges, r.artifact.edge_sources);

  fill_stage_stats(g, stage, r.stats);
  r.stats.subset_beta = sub.achieved_beta;
  r.stats.subset_edge_constant = sub.edge_constant;
  r.stats.wall_ms = ms_since(start);
  return r;
}

BuildResult build(ConstructionKind kind, const Graph& g,
                  const TieBreakWeights& tb, double epsilon) {
  switch (kind) {
    case ConstructionKind::kSpanner1: return build_spanner1(g, tb, epsilon);
    case ConstructionKind::kEmulator: return build_emulator(g, tb, epsilon);
    case ConstructionKind::kSpanner2: return build_spanner2(g, tb, epsilon);
  }
  throw std::invalid_argument("unknown construction kind");
}

}  // namespace stripspan
