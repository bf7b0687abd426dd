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

#ifndef STRIPSPAN_SUBSET_SPANNER_HPP_
#define STRIPSPAN_SUBSET_SPANNER_HPP_

#include <cstddef>
#include <vector>

#include "stripspan/graph.hpp"
#include "stripspan/tiebreak.hpp"
#include "stripspan/types.hpp"

namespace stripspan {

struct SubsetSpannerResult {
  std::vector<Edge> edges;      // sorted subgraph edge set
  int achieved_beta = 0;        // measured max additive error over s x s
  std::size_t bought_paths = 0;
  double edge_constant = 0.0;   // edges / (n * sqrt(|s| * log2 n))
};

/// Subset spanner by cluster-and-path-buying. Phase 1 clusters with parameter
/// ceil(sqrt(|s|)), keeps every edge incident to an unclustered vertex, and a
/// center-to-member star per cluster. Phase 2 walks s x s pairs in
/// nondecreasing distance order; a pair's canonical path is bought when its
/// missing-edge cost is at most twice the number of (source, cluster) pairs
/// whose distance the purchase improves, and is also bought whenever the pair
/// would otherwise sit more than +2 from its true distance. Every connected
/// pair inside s therefore ends within +2.
SubsetSpannerResult subset_spanner(const Graph& g, const TieBreakWeights& tb,
                                   const std::vector<Vertex>& s);

}  // namespace stripspan

#endif  // STRIPSPAN_SUBSET_SPANNER_HPP_
