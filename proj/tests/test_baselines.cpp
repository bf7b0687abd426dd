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

#include <cmath>
#include <random>
#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "stripspan/generators.hpp"
#include "stripspan/hitting_set.hpp"
#include "stripspan/multspan.hpp"
#include "stripspan/subset_spanner.hpp"

using namespace stripspan;

namespace {

Graph random_tree(Vertex n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Edge> edges;
  for (Vertex v = 1; v < n; ++v) {
    edges.push_back(make_edge(v, static_cast<Vertex>(rng() % v)));
  }
  return Graph::from_edges(n, std::move(edges));
}

std::vector<std::vector<int>> adjacency_distances(Vertex n,
                                                  const std::vector<Edge>& edges) {
  const Graph h = Graph::from_edges(n, std::vector<Edge>(edges));
  std::vector<std::vector<int>> rows(n);
  for (Vertex u = 0; u < n; ++u) rows[u] = all_distances_from(h, u);
  return rows;
}

}  // namespace

TEST_CASE("multspan keeps every edge of a tree") {
  const Graph t = random_tree(40, 5);
  for (int k : {1, 2, 5}) {
    CHECK(multspan(t, k) == t.edges());
  }
}

TEST_CASE("multspan on C4") {
  const Graph c4 = Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
  SUBCASE("k=2 drops the last edge closing a short cycle") {
    // Lexicographic scan: (0,1), (0,3), (1,2) all join components; (2,3)
    // already has the detour 2-1-0-3 of length 3 <= 3, so it is skipped.
    const auto kept = multspan(c4, 2);
    CHECK(kept == std::vector<Edge>{{0, 1}, {0, 3}, {1, 2}});
  }
  SUBCASE("k=1 keeps everything") {
    CHECK(multspan(c4, 1) == c4.edges());
  }
}

TEST_CASE("multspan stretch, girth, and size on small graphs") {
  for (const Graph& g : {generate_gnp(64, 0.15, 2), generate_gnp(48, 0.3, 9),
                         generate_grid(8, 8)}) {
    const auto oracle = testing::relaxation_apsp(g);
    for (int k : {2, 3, multspan_k(g.vertex_count())}) {
      const auto kept = multspan(g, k);
      CHECK(testing::girth_exceeds(g.vertex_count(), kept, 2 * k));
      CHECK(static_cast<double>(kept.size()) <=
            std::pow(g.vertex_count(), 1.0 + 1.0 / k) + g.vertex_count());
      const auto rows = adjacency_distances(g.vertex_count(), kept);
      for (Vertex u = 0; u < g.vertex_count(); ++u) {
        for (Vertex v = u + 1; v < g.vertex_count(); ++v) {
          if (oracle[u][v] >= testing::kFar) continue;
          REQUIRE(rows[u][v] != kUnreachable);
          REQUIRE(rows[u][v] <= (2 * k - 1) * oracle[u][v]);
        }
      }
    }
  }
}

TEST_CASE("hitting_set greedy fixtures") {
  SUBCASE("documented example picks {2, 3}") {
    SetFamily fam;
    fam.members = {{1, 2}, {2, 3}, {3, 4}};
    CHECK(hitting_set(6, fam) == std::vector<Vertex>{2, 3});
  }
  SUBCASE("singleton member") {
    SetFamily fam;
    fam.members = {{5}};
    CHECK(hitting_set(8, fam) == std::vector<Vertex>{5});
  }
  SUBCASE("empty family") {
    CHECK(hitting_set(4, SetFamily{}).empty());
  }
  SUBCASE("empty member is an error") {
    SetFamily fam;
    fam.members = {{1}, {}};
    CHECK_THROWS_AS(hitting_set(4, fam), std::invalid_argument);
  }
}

TEST_CASE("hitting_set hits everything within the greedy bound") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 50; ++trial) {
    const Vertex n = 30 + static_cast<Vertex>(rng() % 100);
    SetFamily fam;
    const int sets = 1 + static_cast<int>(rng() % 40);
    for (int i = 0; i < sets; ++i) {
      const int size = 1 + static_cast<int>(rng() % 12);
      std::set<Vertex> member;
      while (static_cast<int>(member.size()) < size) {
        member.insert(static_cast<Vertex>(rng() % n));
      }
      fam.members.emplace_back(member.begin(), member.end());
    }
    const auto hs = hitting_set(n, fam);
    std::set<Vertex> in_hs(hs.begin(), hs.end());
    for (const auto& member : fam.members) {
      bool hit = false;
      for (Vertex v : member) hit |= in_hs.count(v) > 0;
      REQUIRE(hit);
    }
    const double bound = std::ceil(
        static_cast<double>(n) / static_cast<double>(fam.min_size()) *
        (std::log(static_cast<double>(fam.size())) + 1.0));
    REQUIRE(static_cast<double>(hs.size()) <= bound);
  }
}

TEST_CASE("subset_spanner trivial subsets") {
  const Graph g = generate_gnp(60, 0.1, 3);
  const TieBreakWeights tb(g, 3);
  CHECK(subset_spanner(g, tb, {}).edges.empty());
  CHECK(subset_spanner(g, tb, {4}).edges.empty());
}

TEST_CASE("subset_spanner on a tree is exact for the subset") {
  const Graph t = random_tree(80, 17);
  const TieBreakWeights tb(t, 17);
  const std::vector<Vertex> s = {3, 9, 22, 41, 67, 79};
  const auto result = subset_spanner(t, tb, s);
  CHECK(result.achieved_beta == 0);
  const auto rows = adjacency_distances(t.vertex_count(), result.edges);
  for (Vertex a : s) {
    for (Vertex b : s) {
      if (a == b) continue;
      CHECK(rows[a][b] == distance(t, a, b));
    }
  }
}

TEST_CASE("subset_spanner G(300, 0.05): 20 terminals all within +2") {
  const Graph g = generate_gnp(300, 0.05, 11);
  const TieBreakWeights tb(g, 11);
  std::vector<Vertex> s;
  std::mt19937_64 rng(19);
  std::set<Vertex> chosen;
  while (chosen.size() < 20) chosen.insert(static_cast<Vertex>(rng() % 300));
  s.assign(chosen.begin(), chosen.end());
  const auto result = subset_spanner(g, tb, s);

  // Subgraph property.
  for (const Edge& e : result.edges) REQUIRE(g.has_edge(e.u, e.v));

  const auto rows = adjacency_distances(g.vertex_count(), result.edges);
  int worst = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      const int dg = distance(g, s[i], s[j]);
      if (dg == kUnreachable) continue;
      const int dh = rows[s[i]][s[j]];
      REQUIRE(dh != kUnreachable);
      REQUIRE(dh >= dg);
      worst = std::max(worst, dh - dg);
    }
  }
  CHECK(worst <= 2);
  CHECK(result.achieved_beta == worst);
  CHECK(result.edge_constant > 0.0);
}
