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

#ifndef STRIPSPAN_MULTSPAN_HPP_
#define STRIPSPAN_MULTSPAN_HPP_

#include <vector>

#include "stripspan/graph.hpp"
#include "stripspan/types.hpp"

namespace stripspan {

/// Greedy multiplicative (2k-1)-spanner. Edges are scanned in lexicographic
/// order; an edge is kept iff the current spanner has no u-v path of length
/// <= 2k-1. The output has girth > 2k, so at most n^(1+1/k) + n edges, and
/// every pair stretches by at most 2k-1. Returns the kept edges sorted.
std::vector<Edge> multspan(const Graph& g, int k);

/// k used throughout the constructions: ceil(log2 n), at least 1.
int multspan_k(Vertex n);

}  // namespace stripspan

#endif  // STRIPSPAN_MULTSPAN_HPP_
