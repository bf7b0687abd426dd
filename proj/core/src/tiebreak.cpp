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

#include "stripspan/tiebreak.hpp"

#include "stripspan/util.hpp"

namespace stripspan {

namespace {
constexpr std::uint64_t kUnitBits = 48;
constexpr std::uint64_t kUnitMask = (1ULL << kUnitBits) - 1;
}  // namespace

TieBreakWeights::TieBreakWeights(const Graph& g, std::uint64_t seed)
    : n_(g.vertex_count()), seed_(seed) {}

std::uint64_t TieBreakWeights::perturbation_units(Vertex a, Vertex b) const {
  const Edge e = make_edge(a, b);
  std::uint64_t h = splitmix64(seed_ ^ 0x5354524950ULL);
  h = splitmix64(h ^ static_cast<std::uint64_t>(static_cast<std::uint32_t>(e.u)));
  h = splitmix64(h ^ static_cast<std::uint64_t>(static_cast<std::uint32_t>(e.v)));
  return (h & kUnitMask) | 1ULL;  // nonzero
}

double TieBreakWeights::eta(Vertex a, Vertex b) const {
  // One unit is 1 / (2 n^2 2^48); units < 2^48 keep eta < 1/(2n^2).
  const double denom = 2.0 * static_cast<double>(n_) * static_cast<double>(n_) *
                       static_cast<double>(1ULL << 32) * 65536.0;
  return static_cast<double>(perturbation_units(a, b)) / denom;
}

}  // namespace stripspan
