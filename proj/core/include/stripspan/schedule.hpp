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

#ifndef STRIPSPAN_SCHEDULE_HPP_
#define STRIPSPAN_SCHEDULE_HPP_

#include <string>
#include <string_view>

#include "stripspan/types.hpp"

namespace stripspan {

enum class ConstructionKind { kSpanner1, kEmulator, kSpanner2 };

std::string to_string(ConstructionKind kind);
ConstructionKind parse_construction_kind(std::string_view name);

/// Integer knobs derived from (kind, n, epsilon):
///   spanner1: m = ceil(n^((1-eps)/2)), d unbounded, eps in [0, 1].
///   emulator: mu = 1/6 - 5 eps/6, delta = 1/3 - 2 eps/3, eps in [0, 1/5].
///   spanner2: mu = 1/3 - 4 eps/3, delta = 2/3 - 5 eps/3, eps in [0, 1/4].
/// All exponent-to-integer conversions round up; m is floored at 1 so the
/// mu = 0 endpoints stay valid.
struct ParameterSchedule {
  ConstructionKind kind = ConstructionKind::kSpanner1;
  Vertex n = 0;
  double epsilon = 0.0;
  double mu = 0.0;     // exponent of the strip cluster quota m
  double delta = 0.0;  // exponent of the strip length bound / thresholds
  int e = 1;           // cluster size, ceil(n^eps)
  int m = 1;           // strip cluster quota
  int d = 0;           // strip length bound; kUnboundedLength for spanner1
  long long strip_threshold = 0;  // ceil(n^delta / 2); 0 when unused
  long long clean_threshold = 0;  // ceil(n^delta);     0 when unused
};

/// Throws std::invalid_argument naming the admissible interval when epsilon
/// is out of range for the kind.
ParameterSchedule schedule(ConstructionKind kind, Vertex n, double epsilon);

/// ceil(n^exponent) with a tolerance for pow() landing just above an integer.
long long ceil_power(Vertex n, double exponent);

}  // namespace stripspan

#endif  // STRIPSPAN_SCHEDULE_HPP_
