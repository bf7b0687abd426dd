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

#include <sstream>

#include "doctest.h"
#include "stripspan/generators.hpp"
#include "stripspan/graph_io.hpp"

using namespace stripspan;

TEST_CASE("grid 3x3 has 9 vertices and 12 edges") {
  const Graph g = generate_grid(3, 3);
  CHECK(g.vertex_count() == 9);
  CHECK(g.edge_count() == 12);
  CHECK(distance(g, 0, 8) == 4);
}

TEST_CASE("gnp with p=1 is complete") {
  const Graph g = generate_gnp(100, 1.0, 9);
  CHECK(g.edge_count() == 4950);
}

TEST_CASE("gnp is deterministic per seed") {
  const Graph a = generate_gnp(500, 0.02, 9);
  const Graph b = generate_gnp(500, 0.02, 9);
  const Graph c = generate_gnp(500, 0.02, 10);
  CHECK(a.edges() == b.edges());
  CHECK(a.edges() != c.edges());
}

TEST_CASE("generator parameter validation") {
  CHECK_THROWS_AS(generate_gnp(10, 0.0, 1), std::invalid_argument);
  CHECK_THROWS_AS(generate_gnp(10, 1.5, 1), std::invalid_argument);
  CHECK_THROWS_AS(generate("grid", 10, 3, 1), std::invalid_argument);  // 3 ∤ 10
  CHECK_THROWS_AS(generate_rgg(10, 0.0, 1), std::invalid_argument);
  CHECK_THROWS_AS(generate_ba(3, 4, 1), std::invalid_argument);
  CHECK_THROWS_AS(generate("mystery", 10, 1, 1), std::invalid_argument);
}

TEST_CASE("ba has the expected edge count and is connected") {
  const Graph g = generate_ba(200, 3, 5);
  CHECK(g.edge_count() == 6 + 197 * 3);  // K4 then 3 per newcomer
  const auto comp = component_ids(g);
  for (int c : comp) CHECK(c == 0);
}

TEST_CASE("rgg is deterministic and radius-monotone") {
  const Graph small = generate_rgg(150, 0.08, 4);
  const Graph big = generate_rgg(150, 0.2, 4);
  CHECK(small.edges() == generate_rgg(150, 0.08, 4).edges());
  CHECK(small.edge_count() <= big.edge_count());
}

TEST_CASE("largest_component keeps the biggest piece, relabeled in order") {
  // Components: {0,1,2} (triangle), {3,4} (edge), {5} isolated.
  const Graph g = Graph::from_edges(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}});
  const Graph lc = largest_component(g);
  CHECK(lc.vertex_count() == 3);
  CHECK(lc.edge_count() == 3);
}

TEST_CASE("edge-list round-trip preserves the graph exactly") {
  const Graph g = generate_gnp(80, 0.05, 3);
  std::stringstream buf;
  write_edge_list(g, buf);
  const Graph back = read_edge_list(buf);
  CHECK(back.vertex_count() == g.vertex_count());
  CHECK(back.edges() == g.edges());
}

TEST_CASE("edge-list parsing: header, comments, duplicate and reversed pairs") {
  std::istringstream in(
      "# generated fixture\n"
      "# n=7\n"
      "0 1\n"
      "1 0\n"
      "   \n"
      "2 3\n"
      "2 3\n"
      "# trailing comment\n"
      "5 4\n");
  const Graph g = read_edge_list(in);
  CHECK(g.vertex_count() == 7);
  CHECK(g.edges() == std::vector<Edge>{{0, 1}, {2, 3}, {4, 5}});

  std::istringstream no_header("0 2\n1 2\n");
  const Graph h = read_edge_list(no_header);
  CHECK(h.vertex_count() == 3);
}

TEST_CASE("isolated trailing vertices survive a round-trip via the header") {
  const Graph g = Graph::from_edges(5, {{0, 1}});  // 2..4 isolated
  std::stringstream buf;
  write_edge_list(g, buf);
  const Graph back = read_edge_list(buf);
  CHECK(back.vertex_count() == 5);
}
