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

#include "stripspan/strips.hpp"

#include <algorithm>
#include <memory>
#include <stdexcept>

#include "json.hpp"

namespace stripspan {

namespace {

/// Scratch state for one source's depth-first walk over its canonical tree.
/// Counters are maintained incrementally along the root path and undone on
/// backtrack.
struct SourceScan {
  const Clustering& c;
  StripSet& ss;
  const ShortestPathTree& tree;
  const TreeChildren& children;
  const std::vector<Vertex>& subtree_min;

  std::vector<int> cluster_visits;
  std::vector<int> strip_visits;
  int clean_cnt = 0;
  int strip_cnt = 0;

  struct Candidate {
    Vertex x = -1;
    Vertex least_pair = -1;  // smallest v whose pair (source, v) inserts x
    int strips_hit = 0;
  };
  Candidate best;

  SourceScan(const Clustering& c_, StripSet& ss_, const ShortestPathTree& t_,
             const TreeChildren& ch_, const std::vector<Vertex>& sm_)
      : c(c_), ss(ss_), tree(t_), children(ch_), subtree_min(sm_),
        cluster_visits(c_.cluster_count(), 0),
        strip_visits(ss_.strip_count(), 0) {}

  // Returns +1 if entering v contributed a new clean cluster.
  int enter(Vertex v) {
    int gained = 0;
    const std::int32_t cid = c.membership[v];
    if (cid >= 0 && ss.clean[cid] && cluster_visits[cid]++ == 0) {
      ++clean_cnt;
      gained = 1;
    }
    for (std::int32_t s : ss.strips_at_vertex[v]) {
      if (strip_visits[s]++ == 0) ++strip_cnt;
    }
    return gained;
  }

  void exit(Vertex v) {
    const std::int32_t cid = c.membership[v];
    if (cid >= 0 && ss.clean[cid] && --cluster_visits[cid] == 0) --clean_cnt;
    for (std::int32_t s : ss.strips_at_vertex[v]) {
      if (--strip_visits[s] == 0) --strip_cnt;
    }
  }

  void consider(Vertex x) {
    // Prefix rho(source, x) touches exactly m clean clusters here. Test the
    // remaining insertion conditions; failures cannot be cured further down
    // the same branch, so the caller prunes either way.
    if (tree.depth[x] > ss.d || strip_cnt > ss.m) return;
    Vertex least;
    if (x == tree.source) {
      least = -1;  // pair partner must be a different vertex
      for (Vertex ch : children.of(x)) {
        Vertex cand = subtree_min[ch];
        if (least == -1 || cand < least) least = cand;
      }
      if (least == -1) return;  // isolated source: no pair exists
    } else {
      least = subtree_min[x];
    }
    if (best.x == -1 || least < best.least_pair) {
      best = {x, least, strip_cnt};
    }
  }
};

std::vector<Vertex> compute_subtree_min(const ShortestPathTree& tree,
                                        const TreeChildren& children) {
  const Vertex n = static_cast<Vertex>(tree.depth.size());
  std::vector<Vertex> mins(n, -1);
  // Children offsets give a valid processing order only via depth; walk
  // vertices by decreasing depth so children fold into parents.
  std::vector<Vertex> order;
  order.reserve(n);
  for (Vertex v = 0; v < n; ++v) {
    if (tree.reachable(v)) order.push_back(v);
  }
  std::sort(order.begin(), order.end(), [&](Vertex a, Vertex b) {
    return tree.depth[a] > tree.depth[b];
  });
  for (Vertex v : order) {
    Vertex best = v;
    for (Vertex ch : children.of(v)) {
      if (mins[ch] < best) best = mins[ch];
    }
    mins[v] = best;
  }
  return mins;
}

/// Finds the candidate the lexicographic pair scan would insert first from
/// this source, if any. Iterative DFS; prunes below the first vertex whose
/// prefix reaches m clean clusters.
bool scan_source(SourceScan& scan) {
  struct Frame {
    Vertex v;
    std::size_t next_child;
    bool pruned;
  };
  std::vector<Frame> stack;
  const Vertex source = scan.tree.source;
  int gained = scan.enter(source);
  bool at_limit = gained == 1 && scan.clean_cnt == scan.ss.m;
  if (at_limit) scan.consider(source);
  stack.push_back({source, 0, at_limit});
  while (!stack.empty()) {
    Frame& f = stack.back();
    auto kids = scan.children.of(f.v);
    if (f.pruned || f.next_child >= kids.size()) {
      scan.exit(f.v);
      stack.pop_back();
      continue;
    }
    Vertex ch = kids[f.next_child++];
    int g2 = scan.enter(ch);
    bool limit = g2 == 1 && scan.clean_cnt == scan.ss.m;
    if (limit) scan.consider(ch);
    stack.push_back({ch, 0, limit});
  }
  return scan.best.x != -1;
}

void insert_strip(const Clustering& c, StripSet& ss,
                  std::vector<std::uint8_t>& edge_touched,
                  const ShortestPathTree& tree, Vertex x, int strips_hit) {
  Path p = path_from_tree(tree, x);
  const std::int32_t id = ss.strip_count();
  for (Vertex w : p.vertices) {
    ss.strips_at_vertex[w].push_back(id);
    const std::int32_t cid = c.membership[w];
    if (cid >= 0) ss.clean[cid] = 0;
  }
  for (std::size_t i = 0; i + 1 < p.vertices.size(); ++i) {
    const Vertex a = p.vertices[i];
    const Vertex b = p.vertices[i + 1];
    const std::uint64_t key = edge_key(a, b);
    if (!c.is_clustered(a) && !c.is_clustered(b)) {
      ++ss.edge_cases.both_unclustered;
    } else if (ss.edge_keys.count(key)) {
      ++ss.edge_cases.repeated;
    } else if (!edge_touched[a] || !edge_touched[b]) {
      ++ss.edge_cases.new_vertex;
    } else {
      ++ss.edge_cases.between_strips;
    }
    if (ss.edge_keys.insert(key).second) {
      ss.edges.push_back(make_edge(a, b));
    }
    edge_touched[a] = 1;
    edge_touched[b] = 1;
  }
  ss.strips.push_back(std::move(p));
  ss.insertions.push_back({strips_hit, ss.m, tree.depth[x]});
}

}  // namespace

int StripSet::clean_cluster_count() const {
  int count = 0;
  for (std::uint8_t f : clean) count += f;
  return count;
}

StripSet create_strips(const Graph& g, const TieBreakWeights& tb,
                       const Clustering& c, int d, int m) {
  if (m < 1) throw std::invalid_argument("strip cluster quota m must be >= 1");
  if (d < 1 && d != kUnboundedLength) {
    throw std::invalid_argument("strip length bound must be >= 1 or unbounded");
  }
  StripSet ss;
  ss.d = d;
  ss.m = m;
  ss.strips_at_vertex.assign(g.vertex_count(), {});
  ss.clean.assign(c.cluster_count(), 1);
  if (c.cluster_count() < m) return ss;  // condition 3 unsatisfiable

  CanonicalTreeCache trees(g, tb);
  std::vector<std::unique_ptr<TreeChildren>> children(g.vertex_count());
  std::vector<std::unique_ptr<std::vector<Vertex>>> mins(g.vertex_count());
  std::vector<std::uint8_t> edge_touched(g.vertex_count(), 0);

  bool inserted = true;
  while (inserted) {
    inserted = false;
    for (Vertex u = 0; u < g.vertex_count(); ++u) {
      const ShortestPathTree& tree = trees.tree(u);
      if (!children[u]) {
        children[u] = std::make_unique<TreeChildren>(tree_children(tree));
        mins[u] = std::make_unique<std::vector<Vertex>>(
            compute_subtree_min(tree, *children[u]));
      }
      SourceScan scan(c, ss, tree, *children[u], *mins[u]);
      if (!scan_source(scan)) continue;
      insert_strip(c, ss, edge_touched, tree, scan.best.x, scan.best.strips_hit);
      inserted = true;
      break;  // restart the pair scan from the beginning
    }
  }
  return ss;
}

std::pair<int, int> path_stats(const StripSet& ss, const Clustering& c,
                               const Path& p) {
  std::unordered_set<std::int32_t> strips;
  std::unordered_set<std::int32_t> clean_clusters;
  for (Vertex v : p.vertices) {
    for (std::int32_t s : ss.strips_at_vertex[v]) strips.insert(s);
    const std::int32_t cid = c.membership[v];
    if (cid >= 0 && ss.clean[cid]) clean_clusters.insert(cid);
  }
  return {static_cast<int>(strips.size()),
          static_cast<int>(clean_clusters.size())};
}

std::size_t strip_edge_budget(const StripSet& ss, const Clustering& c) {
  std::size_t count = 0;
  for (const Edge& e : ss.edges) {
    if (c.is_clustered(e.u) || c.is_clustered(e.v)) ++count;
  }
  return count;
}

std::string to_json(const StripSet& ss) {
  nlohmann::json j;
  if (ss.d == kUnboundedLength) {
    j["d"] = "inf";
  } else {
    j["d"] = ss.d;
  }
  j["m"] = ss.m;
  auto strips = nlohmann::json::array();
  for (const Path& p : ss.strips) strips.push_back(p.vertices);
  j["strips"] = strips;
  return j.dump();
}

}  // namespace stripspan
