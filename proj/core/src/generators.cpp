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

#include "stripspan/generators.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>
#include <vector>

namespace stripspan {

namespace {

double unit_draw(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;  // [0, 1)
}

}  // namespace

Graph generate_gnp(Vertex n, double p, std::uint64_t seed) {
  if (n < 0) throw std::invalid_argument("gnp: n must be nonnegative");
  if (!(p > 0.0) || p > 1.0) {
    throw std::invalid_argument("gnp: p must be in (0, 1]");
  }
  std::mt19937_64 rng(seed);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (unit_draw(rng) < p) edges.push_back({u, v});
    }
  }
  return Graph::from_edges(n, std::move(edges));
}

Graph generate_grid(Vertex rows, Vertex cols) {
  if (rows < 1 || cols < 1) {
    throw std::invalid_argument("grid: side lengths must be positive");
  }
  std::vector<Edge> edges;
  auto id = [cols](Vertex r, Vertex c) { return r * cols + c; };
  for (Vertex r = 0; r < rows; ++r) {
    for (Vertex c = 0; c < cols; ++c) {
      if (c + 1 < cols) edges.push_back(make_edge(id(r, c), id(r, c + 1)));
      if (r + 1 < rows) edges.push_back(make_edge(id(r, c), id(r + 1, c)));
    }
  }
  return Graph::from_edges(rows * cols, std::move(edges));
}

Graph generate_rgg(Vertex n, double radius, std::uint64_t seed) {
  if (n < 0) throw std::invalid_argument("rgg: n must be nonnegative");
  if (!(radius > 0.0)) throw std::invalid_argument("rgg: radius must be positive");
  std::mt19937_64 rng(seed);
  std::vector<double> x(n), y(n);
  for (Vertex i = 0; i < n; ++i) {
    x[i] = unit_draw(rng);
    y[i] = unit_draw(rng);
  }
  const double r2 = radius * radius;
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      const double dx = x[u] - x[v];
      const double dy = y[u] - y[v];
      if (dx * dx + dy * dy <= r2) edges.push_back({u, v});
    }
  }
  return Graph::from_edges(n, std::move(edges));
}

Graph generate_ba(Vertex n, int attach, std::uint64_t seed) {
  if (attach < 1) throw std::invalid_argument("ba: attachment degree must be >= 1");
  if (n < attach + 1) {
    throw std::invalid_argument("ba: n must be at least attach+1");
  }
  std::mt19937_64 rng(seed);
  std::vector<Edge> edges;
  std::vector<Vertex> targets;  // one entry per edge endpoint
  for (Vertex u = 0; u < attach + 1; ++u) {
    for (Vertex v = u + 1; v < attach + 1; ++v) {
      edges.push_back({u, v});
      targets.push_back(u);
      targets.push_back(v);
    }
  }
  std::vector<Vertex> picked;
  for (Vertex w = attach + 1; w < n; ++w) {
    picked.clear();
    while (static_cast<int>(picked.size()) < attach) {
      const Vertex t = targets[rng() % targets.size()];
      if (std::find(picked.begin(), picked.end(), t) == picked.end()) {
        picked.push_back(t);
      }
    }
    for (Vertex t : picked) {
      edges.push_back(make_edge(w, t));
      targets.push_back(w);
      targets.push_back(t);
    }
  }
  return Graph::from_edges(n, std::move(edges));
}

Graph generate(const std::string& model, Vertex n, double param,
               std::uint64_t seed) {
  if (model == "gnp") return generate_gnp(n, param, seed);
  if (model == "grid") {
    const Vertex rows = static_cast<Vertex>(param);
    if (rows < 1 || n % rows != 0) {
      throw std::invalid_argument("grid: param must be a row count dividing n");
    }
    return generate_grid(rows, n / rows);
  }
  if (model == "rgg") return generate_rgg(n, param, seed);
  if (model == "ba") return generate_ba(n, static_cast<int>(param), seed);
  throw std::invalid_argument("unknown model: " + model +
                              " (expected gnp, grid, rgg, or ba)");
}

Graph largest_component(const Graph& g) {
  const std::vector<int> comp = component_ids(g);
  if (g.vertex_count() == 0) return g;
  const int ncomp = *std::max_element(comp.begin(), comp.end()) + 1;
  std::vector<Vertex> size(ncomp, 0);
  for (int c : comp) ++size[c];
  const int keep = static_cast<int>(
      std::max_element(size.begin(), size.end()) - size.begin());

  std::vector<Vertex> relabel(g.vertex_count(), -1);
  Vertex next = 0;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (comp[v] == keep) relabel[v] = next++;
  }
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    if (comp[e.u] == keep && comp[e.v] == keep) {
      edges.push_back(make_edge(relabel[e.u], relabel[e.v]));
    }
  }
  return Graph::from_edges(next, std::move(edges));
}

}  // namespace stripspan
