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

#ifndef STRIPSPAN_TIEBREAK_HPP_
#define STRIPSPAN_TIEBREAK_HPP_

#include <cstdint>

#include "stripspan/graph.hpp"
#include "stripspan/types.hpp"

namespace stripspan {

/// Deterministic per-edge perturbation that makes shortest paths (generically)
/// unique. Conceptually every edge weighs 1 + eta(u,v) with
/// eta(u,v) in (0, 1/(2n^2)); a simple path accumulates < 1/2 total
/// perturbation, so hop counts are untouched and path comparisons reduce to
/// the lexicographic pair (hop count, perturbation sum). The perturbation is
/// kept in integer units (48 bits per edge, summed in uint64) so comparisons
/// are exact.
class TieBreakWeights {
 public:
  TieBreakWeights(const Graph& g, std::uint64_t seed);

  std::uint64_t seed() const { return seed_; }
  Vertex vertex_count() const { return n_; }

  /// Integer perturbation units for edge {a,b}; symmetric, in [1, 2^48).
  std::uint64_t perturbation_units(Vertex a, Vertex b) const;

  /// Real-valued eta; strictly inside (0, 1/(2n^2)).
  double eta(Vertex a, Vertex b) const;

 private:
  Vertex n_ = 0;
  std::uint64_t seed_ = 0;
};

}  // namespace stripspan

#endif  // STRIPSPAN_TIEBREAK_HPP_
