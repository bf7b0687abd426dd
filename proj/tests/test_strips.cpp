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

#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "stripspan/generators.hpp"

using namespace stripspan;

namespace {

Graph path_graph(Vertex n) {
  std::vector<Edge> edges;
  for (Vertex i = 0; i + 1 < n; ++i) edges.push_back({i, static_cast<Vertex>(i + 1)});
  return Graph::from_edges(n, std::move(edges));
}

}  // namespace

TEST_CASE("P9 walkthrough: one strip covering the four clusters") {
  // P9 with e=2 clusters {0,1},{2,3},{4,5},{6,7}; vertex 8 unclustered.
  // With d unbounded and m=4, the lexicographic pair scan walks rho(0, v)
  // for growing v; the prefix first touches its 4th clean cluster at
  // vertex 6, so the first insertable candidate is rho(0,6) = 0..6, after
  // which no clean clusters remain and the scan reaches its fixpoint.
  const Graph g = path_graph(9);
  const TieBreakWeights tb(g, 1);
  const Clustering c = cluster(g, 2);
  REQUIRE(c.cluster_count() == 4);
  const StripSet ss = create_strips(g, tb, c, kUnboundedLength, 4);
  REQUIRE(ss.strip_count() == 1);
  CHECK(ss.strips[0].vertices == std::vector<Vertex>{0, 1, 2, 3, 4, 5, 6});
  CHECK(ss.insertions[0].strips_hit == 0);
  CHECK(ss.insertions[0].clean_hit == 4);
  CHECK(ss.insertions[0].length == 6);
  CHECK(ss.clean_cluster_count() == 0);
  // All six strip edges touch clustered vertices.
  CHECK(ss.edges.size() == 6);
  CHECK(strip_edge_budget(ss, c) == 6);
  CHECK(ss.edge_cases.new_vertex == 6);
  CHECK(ss.edge_cases.between_strips == 0);
  CHECK(ss.edge_cases.repeated == 0);
  CHECK(ss.edge_cases.both_unclustered == 0);

  const auto replay = testing::replay_strips(g, tb, c, ss);
  INFO(replay.what);
  CHECK(replay.ok);

  SUBCASE("path_stats after the strip") {
    Path p;
    p.vertices = {5, 6, 7};
    CHECK(path_stats(ss, c, p) == std::pair<int, int>{1, 0});
    p.vertices = {7, 8};
    CHECK(path_stats(ss, c, p) == std::pair<int, int>{0, 0});
    p.vertices.clear();
    CHECK(path_stats(ss, c, p) == std::pair<int, int>{0, 0});
  }
}

TEST_CASE("path_stats against an empty strip set counts clean clusters only") {
  const Graph g = path_graph(9);
  const Clustering c = cluster(g, 2);
  StripSet empty;
  empty.strips_at_vertex.assign(9, {});
  empty.clean.assign(c.cluster_count(), 1);
  Path p;
  p.vertices = {0, 1, 2, 3, 4, 5, 6, 7, 8};
  CHECK(path_stats(empty, c, p) == std::pair<int, int>{0, 4});
}

TEST_CASE("m larger than the cluster count yields an empty strip set") {
  const Graph g = path_graph(9);
  const TieBreakWeights tb(g, 1);
  const Clustering c = cluster(g, 2);
  const StripSet ss = create_strips(g, tb, c, kUnboundedLength, 5);
  CHECK(ss.strip_count() == 0);
  CHECK(strip_edge_budget(ss, c) == 0);
}

TEST_CASE("empty clustering yields an empty strip set") {
  const Graph g = path_graph(9);
  const TieBreakWeights tb(g, 1);
  const Clustering c = cluster(g, 10);  // no vertex qualifies
  REQUIRE(c.cluster_count() == 0);
  const StripSet ss = create_strips(g, tb, c, kUnboundedLength, 1);
  CHECK(ss.strip_count() == 0);
}

TEST_CASE("fixpoint and bookkeeping on random graphs") {
  struct Cell {
    Vertex n;
    double p;
    int e, m, d;
  };
  for (const Cell& cell : {Cell{120, 0.05, 2, 4, kUnboundedLength},
                           Cell{150, 0.04, 1, 5, 6},
                           Cell{200, 0.03, 3, 2, 9}}) {
    const Graph g = generate_gnp(cell.n, cell.p, 7);
    const TieBreakWeights tb(g, 13);
    const Clustering c = cluster(g, cell.e);
    const StripSet ss = create_strips(g, tb, c, cell.d, cell.m);
    CAPTURE(cell.n);

    // Every insertion held its conditions (independent replay).
    const auto replay = testing::replay_strips(g, tb, c, ss);
    INFO(replay.what);
    REQUIRE(replay.ok);

    // Strip count is capped by clusters/m.
    CHECK(ss.strip_count() <= c.cluster_count() / cell.m);

    // Fixpoint: no canonical path of length <= d intersecting <= m strips
    // touches >= m clean clusters.
    CanonicalTreeCache cache(g, tb);
    const auto comp = component_ids(g);
    std::mt19937_64 rng(99);
    for (int i = 0; i < 2000; ++i) {
      const Vertex u = static_cast<Vertex>(rng() % cell.n);
      const Vertex v = static_cast<Vertex>(rng() % cell.n);
      if (u == v || comp[u] != comp[v]) continue;
      const Path p = path_from_tree(cache.tree(u), v);
      const auto [strips_hit, clean_hit] = path_stats(ss, c, p);
      const bool within_d = cell.d == kUnboundedLength || p.length() <= cell.d;
      REQUIRE(!(within_d && strips_hit <= cell.m && clean_hit >= cell.m));
    }

    // Edge accounting: a clustered-incident edge is new exactly once, in one
    // of the two new-edge cases.
    CHECK(ss.edge_cases.new_vertex + ss.edge_cases.between_strips ==
          strip_edge_budget(ss, c));
    CHECK(strip_edge_budget(ss, c) <= 8u * static_cast<std::size_t>(cell.n));
  }
}

TEST_CASE("strip set serializes with the unbounded sentinel") {
  const Graph g = path_graph(9);
  const TieBreakWeights tb(g, 1);
  const Clustering c = cluster(g, 2);
  const StripSet unbounded = create_strips(g, tb, c, kUnboundedLength, 4);
  CHECK(to_json(unbounded) ==
        R"({"d":"inf","m":4,"strips":[[0,1,2,3,4,5,6]]})");
  const StripSet bounded = create_strips(g, tb, c, 3, 4);
  CHECK(to_json(bounded) == R"({"d":3,"m":4,"strips":[]})");
}

TEST_CASE("create_strips is deterministic") {
  const Graph g = generate_gnp(150, 0.05, 21);
  const TieBreakWeights tb(g, 77);
  const Clustering c = cluster(g, 2);
  const StripSet a = create_strips(g, tb, c, 8, 3);
  const StripSet b = create_strips(g, tb, c, 8, 3);
  CHECK(to_json(a) == to_json(b));
}
