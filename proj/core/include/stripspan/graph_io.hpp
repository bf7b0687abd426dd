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

#ifndef STRIPSPAN_GRAPH_IO_HPP_
#define STRIPSPAN_GRAPH_IO_HPP_

#include <iosfwd>
#include <string>

#include "stripspan/graph.hpp"

namespace stripspan {

/// Edge-list text format:
///   - optional header line `# n=<N>` fixing the vertex count,
///   - one `u v` pair per line, whitespace-separated, 0-indexed,
///   - lines starting with `#` are comments,
///   - duplicate and reversed pairs are deduplicated on load.
/// Without a header, n is 1 + the largest vertex id seen.
Graph read_edge_list(std::istream& in);
Graph read_edge_list_file(const std::string& path);

/// Writes `# n=<N>` followed by the sorted edge list.
void write_edge_list(const Graph& g, std::ostream& out);
void write_edge_list_file(const Graph& g, const std::string& path);

}  // namespace stripspan

#endif  // STRIPSPAN_GRAPH_IO_HPP_
