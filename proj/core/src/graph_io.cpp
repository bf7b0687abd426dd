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

#include "stripspan/graph_io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace stripspan {

Graph read_edge_list(std::istream& in) {
  std::vector<Edge> edges;
  Vertex n = -1;
  Vertex max_id = -1;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    if (line[first] == '#') {
      std::size_t eq = line.find("n=");
      if (eq != std::string::npos && n < 0) {
        n = static_cast<Vertex>(std::stol(line.substr(eq + 2)));
      }
      continue;
    }
    std::istringstream ls(line);
    long u = 0, v = 0;
    if (!(ls >> u >> v)) {
      throw std::runtime_error("edge list parse error at line " +
                               std::to_string(lineno));
    }
    if (u < 0 || v < 0) {
      throw std::runtime_error("negative vertex id at line " +
                               std::to_string(lineno));
    }
    edges.push_back(make_edge(static_cast<Vertex>(u), static_cast<Vertex>(v)));
    max_id = std::max(max_id, std::max(edges.back().u, edges.back().v));
  }
  if (n < 0) n = max_id + 1;
  return Graph::from_edges(n, std::move(edges));
}

Graph read_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open graph file: " + path);
  return read_edge_list(in);
}

void write_edge_list(const Graph& g, std::ostream& out) {
  out << "# n=" << g.vertex_count() << "\n";
  for (const Edge& e : g.edges()) {
    out << e.u << " " << e.v << "\n";
  }
}

void write_edge_list_file(const Graph& g, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open output file: " + path);
  write_edge_list(g, out);
}

}  // namespace stripspan
