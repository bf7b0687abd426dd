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

#include "stripspan/canonical.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace stripspan {

ShortestPathTree build_canonical_tree(const Graph& g, const TieBreakWeights& tb,
                                      Vertex source) {
  g.check_vertex(source);
  const Vertex n = g.vertex_count();
  ShortestPathTree tree;
  tree.source = source;
  tree.depth.assign(n, kUnreachable);
  tree.parent.assign(n, -1);

  std::vector<Vertex> order;  // BFS order; layers are contiguous runs
  order.reserve(n);
  tree.depth[source] = 0;
  tree.parent[source] = source;
  order.push_back(source);
  for (std::size_t head = 0; head < order.size(); ++head) {
    Vertex x = order[head];
    for (Vertex y : g.neighbors(x)) {
      if (tree.depth[y] != kUnreachable) continue;
      tree.depth[y] = tree.depth[x] + 1;
      order.push_back(y);
    }
  }

  // Shortest paths only cross between consecutive BFS layers, so processing
  // vertices in BFS order finalizes each perturbation sum before it is read.
  std::vector<std::uint64_t> pert(n, 0);
  for (std::size_t i = 1; i < order.size(); ++i) {
    Vertex v = order[i];
    const int want = tree.depth[v] - 1;
    std::uint64_t best = 0;
    Vertex best_parent = -1;
    for (Vertex u : g.neighbors(v)) {  // ascending, so ties keep the smaller u
      if (tree.depth[u] != want) continue;
      const std::uint64_t cand = pert[u] + tb.perturbation_units(u, v);
      if (best_parent == -1 || cand < best) {
        best = cand;
        best_parent = u;
      }
    }
    pert[v] = best;
    tree.parent[v] = best_parent;
  }
  return tree;
}

Path path_from_tree(const ShortestPathTree& tree, Vertex target) {
  if (target < 0 || target >= static_cast<Vertex>(tree.depth.size())) {
    throw std::invalid_argument("target out of range");
  }
  if (!tree.reachable(target)) {
    throw std::invalid_argument("no path from " + std::to_string(tree.source) +
                                " to " + std::to_string(target));
  }
  Path p;
  p.vertices.resize(tree.depth[target] + 1);
  Vertex v = target;
  for (int i = tree.depth[target]; i >= 0; --i) {
    p.vertices[i] = v;
    v = tree.parent[v];
  }
  return p;
}

Path canonical_path(const Graph& g, const TieBreakWeights& tb, Vertex u,
                    Vertex v) {
  return path_from_tree(build_canonical_tree(g, tb, u), v);
}

CanonicalTreeCache::CanonicalTreeCache(const Graph& g, const TieBreakWeights& tb)
    : g_(g), tb_(tb), trees_(g.vertex_count()) {}

const ShortestPathTree& CanonicalTreeCache::tree(Vertex source) {
  g_.check_vertex(source);
  if (!trees_[source]) {
    trees_[source] =
        std::make_unique<ShortestPathTree>(build_canonical_tree(g_, tb_, source));
  }
  return *trees_[source];
}

TreeChildren tree_children(const ShortestPathTree& tree) {
  const Vertex n = static_cast<Vertex>(tree.depth.size());
  TreeChildren tc;
  tc.offsets.assign(n + 1, 0);
  for (Vertex v = 0; v < n; ++v) {
    if (v != tree.source && tree.reachable(v)) ++tc.offsets[tree.parent[v] + 1];
  }
  for (Vertex v = 0; v < n; ++v) tc.offsets[v + 1] += tc.offsets[v];
  tc.children.resize(tc.offsets[n]);
  std::vector<std::int32_t> cursor(tc.offsets.begin(), tc.offsets.end() - 1);
  for (Vertex v = 0; v < n; ++v) {  // ascending fill keeps children sorted
    if (v != tree.source && tree.reachable(v)) {
      tc.children[cursor[tree.parent[v]]++] = v;
    }
  }
  return tc;
}

}  // namespace stripspan
