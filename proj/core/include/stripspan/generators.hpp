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

#ifndef STRIPSPAN_GENERATORS_HPP_
#define STRIPSPAN_GENERATORS_HPP_

#include <cstdint>
#include <string>

#include "stripspan/graph.hpp"

namespace stripspan {

/// All generators are deterministic in (n, param, seed); random draws come
/// from a seeded mt19937_64 with explicit bit manipulation so files are
/// identical across platforms.

/// Erdos-Renyi G(n, p); param p in (0, 1].
Graph generate_gnp(Vertex n, double p, std::uint64_t seed);

/// rows x cols lattice, n = rows * cols, vertices row-major.
Graph generate_grid(Vertex rows, Vertex cols);

/// Random geometric graph on the unit square; edge iff distance <= radius.
Graph generate_rgg(Vertex n, double radius, std::uint64_t seed);

/// Barabasi-Albert preferential attachment; each new vertex attaches to
/// `attach` distinct earlier vertices, starting from a (attach+1)-clique.
Graph generate_ba(Vertex n, int attach, std::uint64_t seed);

/// Dispatch by model name: gnp | grid | rgg | ba. For grid, param is the row
/// count and n must be divisible by it.
Graph generate(const std::string& model, Vertex n, double param,
               std::uint64_t seed);

/// Subgraph induced by the largest connected component (smallest component id
/// wins ties), vertices relabeled 0..k-1 preserving order.
Graph largest_component(const Graph& g);

}  // namespace stripspan

#endif  // STRIPSPAN_GENERATORS_HPP_
