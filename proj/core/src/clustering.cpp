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

#include <algorithm>
#include <stdexcept>

#include "json.hpp"

namespace stripspan {

Clustering cluster(const Graph& g, int e) {
  if (e < 1) throw std::invalid_argument("cluster size parameter must be >= 1");
  const Vertex n = g.vertex_count();
  Clustering c;
  c.e = e;
  c.membership.assign(n, -1);

  std::vector<char> marked(n, 0);
  bool added = true;
  while (added) {
    added = false;
    for (Vertex u = 0; u < n; ++u) {
      if (marked[u]) continue;
      int unmarked = 0;
      for (Vertex w : g.neighbors(u)) {
        if (!marked[w]) ++unmarked;
      }
      if (unmarked < e - 1) continue;

      std::vector<Vertex> members;
      members.reserve(e);
      members.push_back(u);
      for (Vertex w : g.neighbors(u)) {  // ascending: lowest ids win
        if (static_cast<int>(members.size()) == e) break;
        if (!marked[w]) members.push_back(w);
      }
      const std::int32_t idx = static_cast<std::int32_t>(c.clusters.size());
      for (Vertex w : members) {
        marked[w] = 1;
        c.membership[w] = idx;
      }
      std::sort(members.begin(), members.end());
      c.clusters.push_back(std::move(members));
      c.centers.push_back(u);
      added = true;
    }
  }
  return c;
}

std::size_t unclustered_edge_count(const Graph& g, const Clustering& c) {
  if (static_cast<Vertex>(c.membership.size()) != g.vertex_count()) {
    throw std::invalid_argument("clustering does not match graph");
  }
  std::size_t count = 0;
  for (const Edge& e : g.edges()) {
    if (!c.is_clustered(e.u) && !c.is_clustered(e.v)) ++count;
  }
  return count;
}

std::string to_json(const Clustering& c) {
  nlohmann::json j;
  j["e"] = c.e;
  j["clusters"] = c.clusters;
  j["centers"] = c.centers;
  return j.dump();
}

}  // namespace stripspan
