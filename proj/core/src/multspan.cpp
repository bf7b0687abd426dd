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

#include "stripspan/multspan.hpp"

#include <stdexcept>

namespace stripspan {

int multspan_k(Vertex n) {
  int k = 1;
  while ((Vertex{1} << k) < n) ++k;  // ceil(log2 n), n >= 2
  return n <= 2 ? 1 : k;
}

std::vector<Edge> multspan(const Graph& g, int k) {
  if (k < 1) throw std::invalid_argument("multspan stretch parameter k must be >= 1");
  const Vertex n = g.vertex_count();
  const int threshold = 2 * k - 1;
  std::vector<Edge> kept;
  std::vector<std::vector<Vertex>> adj(n);

  // Depth-limited BFS inside the current spanner.
  std::vector<int> dist(n, -1);
  std::vector<Vertex> queue;
  queue.reserve(n);
  auto within = [&](Vertex s, Vertex t) {
    bool found = false;
    dist[s] = 0;
    queue.clear();
    queue.push_back(s);
    for (std::size_t head = 0; head < queue.size() && !found; ++head) {
      Vertex x = queue[head];
      if (dist[x] == threshold) break;  // queue is sorted by depth
      for (Vertex y : adj[x]) {
        if (dist[y] != -1) continue;
        dist[y] = dist[x] + 1;
        if (y == t) {
          found = true;
          break;
        }
        queue.push_back(y);
      }
    }
    dist[s] = -1;
    for (Vertex x : queue) dist[x] = -1;
    if (found) dist[t] = -1;
    return found;
  };

  for (const Edge& e : g.edges()) {  // already lexicographic
    if (!within(e.u, e.v)) {
      kept.push_back(e);
      adj[e.u].push_back(e.v);
      adj[e.v].push_back(e.u);
    }
  }
  return kept;
}

}  // namespace stripspan
