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

#ifndef STRIPSPAN_BOUNDS_HPP_
#define STRIPSPAN_BOUNDS_HPP_

#include "stripspan/schedule.hpp"
#include "stripspan/types.hpp"

namespace stripspan {

/// Pinned verification constants. The distortion bounds chain the detour
/// accounting (16 per unit of strips/clean clusters, times ceil(log2 n)
/// for each missing edge replaced by a low-stretch path) through the
/// construction-specific exponents; edge and hitting-set bounds mirror the
/// derivations with explicit constants. All of them are checked, never tuned.

/// ceil(log2 n), at least 1.
int log2_ceil(Vertex n);

/// Worst additive distortion the artifact is allowed:
///   spanner1: 32 n^((1-eps)/2) ceil(log2 n)
///   emulator: 64 n^(1/3-2eps/3) ceil(log2 n)^2
///   spanner2: 64 n^(2/3-5eps/3) ceil(log2 n)^2
double distortion_bound(ConstructionKind kind, Vertex n, double epsilon);

/// Exponent used by sweep reports to normalize measured distortion.
double distortion_exponent(ConstructionKind kind, double epsilon);

/// Total edge budget:
///   spanner1: 20 n^(1+eps)
///   emulator / spanner2: 40 n^(1+eps) ceil(log2 n)
double artifact_edge_bound(ConstructionKind kind, Vertex n, double epsilon);

/// Hitting-set size budget: 8 n^(1/2+eps/2) ceil(log2 n) for the emulator,
/// 8 n^(2 eps) ceil(log2 n) for spanner2, 0 (unused) for spanner1.
double hitting_set_bound(ConstructionKind kind, Vertex n, double epsilon);

}  // namespace stripspan

#endif  // STRIPSPAN_BOUNDS_HPP_
