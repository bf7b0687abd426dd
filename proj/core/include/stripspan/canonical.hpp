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

#ifndef STRIPSPAN_CANONICAL_HPP_
#define STRIPSPAN_CANONICAL_HPP_

#include <memory>
#include <vector>

#include "stripspan/graph.hpp"
#include "stripspan/tiebreak.hpp"
#include "stripspan/types.hpp"

namespace stripspan {

/// Shortest-path tree of canonical paths out of one source. Every canonical
/// path from the source is the parent chain of its endpoint, so the union of
/// all of them is this tree. depth[] is the exact hop distance; parent of the
/// source is the source itself; unreachable vertices have depth kUnreachable
/// and parent -1.
struct ShortestPathTree {
  Vertex source = 0;
  std::vector<int> depth;
  std::vector<Vertex> parent;

  bool reachable(Vertex v) const { return depth[v] != kUnreachable; }
};

/// Builds the canonical tree: among all shortest (by hops) paths the one with
/// the minimum perturbation sum wins, and exact perturbation ties fall back to
/// the smaller parent id. Layered DP over BFS levels, so the minimum is exact.
ShortestPathTree build_canonical_tree(const Graph& g, const TieBreakWeights& tb,
                                      Vertex source);

/// Path from the tree's source to target. Throws std::invalid_argument when
/// target is unreachable.
Path path_from_tree(const ShortestPathTree& tree, Vertex target);

/// The canonical shortest path rho(u, v), oriented from u.
Path canonical_path(const Graph& g, const TieBreakWeights& tb, Vertex u,
                    Vertex v);

/// Lazily built per-source canonical trees. Not thread-safe; scans that own
/// one cache may freely reuse trees across restarts since trees depend only on
/// the graph and the tie-break seed.
class CanonicalTreeCache {
 public:
  CanonicalTreeCache(const Graph& g, const TieBreakWeights& tb);

  const ShortestPathTree& tree(Vertex source);

 private:
  const Graph& g_;
  const TieBreakWeights& tb_;
  std::vector<std::unique_ptr<ShortestPathTree>> trees_;
};

/// Children lists of a tree in CSR form, child ids ascending. Rebuilt on
/// demand by scans that walk trees depth-first.
struct TreeChildren {
  std::vector<std::int32_t> offsets;
  std::vector<Vertex> children;

  std::span<const Vertex> of(Vertex v) const {
    return {children.data() + offsets[v], children.data() + offsets[v + 1]};
  }
};

TreeChildren tree_children(const ShortestPathTree& tree);

}  // namespace stripspan

#endif  // STRIPSPAN_CANONICAL_HPP_
