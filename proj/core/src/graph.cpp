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

#include "stripspan/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace stripspan {

Graph Graph::from_edges(Vertex n, std::vector<Edge> edges) {
  if (n < 0) throw std::invalid_argument("vertex count must be nonnegative");
  Graph g;
  g.n_ = n;
  for (Edge& e : edges) {
    if (e.u == e.v) throw std::invalid_argument("self-loop rejected");
    if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n) {
      throw std::invalid_argument("edge endpoint out of range");
    }
    e = make_edge(e.u, e.v);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  g.edges_ = std::move(edges);

  std::vector<std::size_t> deg(n + 1, 0);
  for (const Edge& e : g.edges_) {
    ++deg[e.u + 1];
    ++deg[e.v + 1];
  }
  g.offsets_.assign(n + 1, 0);
  for (Vertex u = 0; u < n; ++u) g.offsets_[u + 1] = g.offsets_[u] + deg[u + 1];
  g.adjacency_.resize(2 * g.edges_.size());
  std::vector<std::size_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
  for (const Edge& e : g.edges_) {
    g.adjacency_[cursor[e.u]++] = e.v;
  }
  for (const Edge& e : g.edges_) {
    g.adjacency_[cursor[e.v]++] = e.u;
  }
  for (Vertex u = 0; u < n; ++u) {
    auto begin = g.adjacency_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[u]);
    auto end = g.adjacency_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[u + 1]);
    std::sort(begin, end);
  }
  return g;
}

bool Graph::has_edge(Vertex a, Vertex b) const {
  check_vertex(a);
  check_vertex(b);
  if (a == b) return false;
  auto nb = neighbors(a);
  return std::binary_search(nb.begin(), nb.end(), b);
}

void Graph::check_vertex(Vertex u) const {
  if (u < 0 || u >= n_) {
    throw std::invalid_argument("vertex id " + std::to_string(u) +
                                " out of range [0, " + std::to_string(n_) + ")");
  }
}

int distance(const Graph& g, Vertex u, Vertex v) {
  g.check_vertex(u);
  g.check_vertex(v);
  if (u == v) return 0;
  std::vector<int> dist(g.vertex_count(), kUnreachable);
  std::vector<Vertex> queue;
  queue.reserve(g.vertex_count());
  dist[u] = 0;
  queue.push_back(u);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Vertex x = queue[head];
    for (Vertex y : g.neighbors(x)) {
      if (dist[y] != kUnreachable) continue;
      dist[y] = dist[x] + 1;
      if (y == v) return dist[y];
      queue.push_back(y);
    }
  }
  return kUnreachable;
}

std::vector<int> all_distances_from(const Graph& g, Vertex u) {
  g.check_vertex(u);
  std::vector<int> dist(g.vertex_count(), kUnreachable);
  std::vector<Vertex> queue;
  queue.reserve(g.vertex_count());
  dist[u] = 0;
  queue.push_back(u);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Vertex x = queue[head];
    for (Vertex y : g.neighbors(x)) {
      if (dist[y] != kUnreachable) continue;
      dist[y] = dist[x] + 1;
      queue.push_back(y);
    }
  }
  return dist;
}

std::vector<int> component_ids(const Graph& g) {
  const Vertex n = g.vertex_count();
  std::vector<int> comp(n, -1);
  std::vector<Vertex> queue;
  int next_id = 0;
  for (Vertex s = 0; s < n; ++s) {
    if (comp[s] != -1) continue;
    comp[s] = next_id;
    queue.clear();
    queue.push_back(s);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      Vertex x = queue[head];
      for (Vertex y : g.neighbors(x)) {
        if (comp[y] != -1) continue;
        comp[y] = next_id;
        queue.push_back(y);
      }
    }
    ++next_id;
  }
  return comp;
}

}  // namespace stripspan
