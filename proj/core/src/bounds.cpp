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

#include "stripspan/bounds.hpp"

#include <cmath>

namespace stripspan {

int log2_ceil(Vertex n) {
  int k = 1;
  while ((Vertex{1} << k) < n) ++k;
  return k;
}

double distortion_exponent(ConstructionKind kind, double epsilon) {
  switch (kind) {
    case ConstructionKind::kSpanner1: return 0.5 - epsilon / 2.0;
    case ConstructionKind::kEmulator: return 1.0 / 3.0 - 2.0 * epsilon / 3.0;
    case ConstructionKind::kSpanner2: return 2.0 / 3.0 - 5.0 * epsilon / 3.0;
  }
  return 0.0;
}

double distortion_bound(ConstructionKind kind, Vertex n, double epsilon) {
  const double L = log2_ceil(n);
  const double core = std::pow(n, distortion_exponent(kind, epsilon));
  if (kind == ConstructionKind::kSpanner1) return 32.0 * core * L;
  return 64.0 * core * L * L;
}

double artifact_edge_bound(ConstructionKind kind, Vertex n, double epsilon) {
  const double base = std::pow(n, 1.0 + epsilon);
  if (kind == ConstructionKind::kSpanner1) return 20.0 * base;
  return 40.0 * base * log2_ceil(n);
}

double hitting_set_bound(ConstructionKind kind, Vertex n, double epsilon) {
  switch (kind) {
    case ConstructionKind::kSpanner1: return 0.0;
    case ConstructionKind::kEmulator:
      return 8.0 * std::pow(n, 0.5 + epsilon / 2.0) * log2_ceil(n);
    case ConstructionKind::kSpanner2:
      return 8.0 * std::pow(n, 2.0 * epsilon) * log2_ceil(n);
  }
  return 0.0;
}

}  // namespace stripspan
