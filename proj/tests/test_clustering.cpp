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

#include "stripspan/clustering.hpp"

#include <set>
#include <stdexcept>

#include "doctest.h"
#include "stripspan/generators.hpp"
#include "stripspan/schedule.hpp"

using namespace stripspan;

namespace {

Graph path_graph(Vertex n) {
  std::vector<Edge> edges;
  for (Vertex i = 0; i + 1 < n; ++i) edges.push_back({i, static_cast<Vertex>(i + 1)});
  return Graph::from_edges(n, std::move(edges));
}

void check_invariants(const Graph& g, const Clustering& c) {
  std::set<Vertex> seen;
  for (int i = 0; i < c.cluster_count(); ++i) {
    REQUIRE(static_cast<int>(c.clusters[i].size()) == c.e);
    for (Vertex v : c.clusters[i]) {
      REQUIRE(!seen.count(v));  // disjoint
      seen.insert(v);
      REQUIRE(c.membership[v] == i);
      if (v != c.centers[i]) REQUIRE(g.has_edge(c.centers[i], v));
    }
  }
  // Termination: no unclustered vertex keeps e-1 unclustered neighbors.
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (c.is_clustered(v)) continue;
    int free_deg = 0;
    for (Vertex w : g.neighbors(v)) {
      if (!c.is_clustered(w)) ++free_deg;
    }
    REQUIRE(free_deg < c.e - 1);
  }
}

}  // namespace

TEST_CASE("P5 with e=2: clusters {0,1} and {2,3}, vertex 4 left over") {
  const Graph g = path_graph(5);
  const Clustering c = cluster(g, 2);
  REQUIRE(c.cluster_count() == 2);
  CHECK(c.clusters[0] == std::vector<Vertex>{0, 1});
  CHECK(c.clusters[1] == std::vector<Vertex>{2, 3});
  CHECK(c.centers == std::vector<Vertex>{0, 2});
  CHECK(!c.is_clustered(4));
  check_invariants(g, c);
  // Vertex 4's only edge touches clustered 3.
  CHECK(unclustered_edge_count(g, c) == 0);
}

TEST_CASE("star K_{1,5} with e=6 forms one full cluster") {
  std::vector<Edge> edges;
  for (Vertex leaf = 1; leaf <= 5; ++leaf) edges.push_back({0, leaf});
  const Graph g = Graph::from_edges(6, std::move(edges));
  const Clustering c = cluster(g, 6);
  REQUIRE(c.cluster_count() == 1);
  CHECK(c.clusters[0] == std::vector<Vertex>{0, 1, 2, 3, 4, 5});
  CHECK(c.centers[0] == 0);
  check_invariants(g, c);
}

TEST_CASE("e = n+1 yields no clusters and is not an error") {
  const Graph g = path_graph(6);
  const Clustering c = cluster(g, 7);
  CHECK(c.cluster_count() == 0);
  for (Vertex v = 0; v < 6; ++v) CHECK(!c.is_clustered(v));
  CHECK(unclustered_edge_count(g, c) == g.edge_count());
}

TEST_CASE("e = 1 clusters every vertex as a singleton") {
  const Graph g = path_graph(4);
  const Clustering c = cluster(g, 1);
  CHECK(c.cluster_count() == 4);
  CHECK(unclustered_edge_count(g, c) == 0);
  check_invariants(g, c);
}

TEST_CASE("claim-1 bound holds exactly on random and complete graphs") {
  SUBCASE("complete graph, e=2") {
    std::vector<Edge> edges;
    for (Vertex u = 0; u < 20; ++u) {
      for (Vertex v = u + 1; v < 20; ++v) edges.push_back({u, v});
    }
    const Graph g = Graph::from_edges(20, std::move(edges));
    const Clustering c = cluster(g, 2);
    CHECK(unclustered_edge_count(g, c) <= 2u * 20u);
    check_invariants(g, c);
  }
  SUBCASE("G(500, 0.02), e = ceil(500^0.1)") {
    const Graph g = generate_gnp(500, 0.02, 11);
    const int e = static_cast<int>(ceil_power(500, 0.1));
    CHECK(e == 2);
    const Clustering c = cluster(g, e);
    CHECK(unclustered_edge_count(g, c) <=
          static_cast<std::size_t>(500) * static_cast<std::size_t>(e));
    check_invariants(g, c);
  }
  SUBCASE("grid and gnp across e values") {
    for (const Graph& g : {generate_grid(8, 16), generate_gnp(300, 0.03, 5)}) {
      for (int e : {1, 2, 3, 5, 9}) {
        const Clustering c = cluster(g, e);
        check_invariants(g, c);
        CHECK(unclustered_edge_count(g, c) <=
              static_cast<std::size_t>(g.vertex_count()) *
                  static_cast<std::size_t>(e));
      }
    }
  }
}

TEST_CASE("clustering is deterministic") {
  const Graph g = generate_gnp(200, 0.05, 3);
  const Clustering a = cluster(g, 3);
  const Clustering b = cluster(g, 3);
  CHECK(to_json(a) == to_json(b));
  CHECK(a.clusters == b.clusters);
}

TEST_CASE("mismatched clustering is rejected") {
  const Graph g = path_graph(5);
  const Graph h = path_graph(6);
  const Clustering c = cluster(g, 2);
  CHECK_THROWS_AS(unclustered_edge_count(h, c), std::invalid_argument);
}

TEST_CASE("clustering serializes to the documented JSON shape") {
  const Graph g = path_graph(5);
  const Clustering c = cluster(g, 2);
  CHECK(to_json(c) ==
        R"({"centers":[0,2],"clusters":[[0,1],[2,3]],"e":2})");
}
