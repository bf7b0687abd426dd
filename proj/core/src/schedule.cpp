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

#include "stripspan/schedule.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "stripspan/strips.hpp"

namespace stripspan {

namespace {
constexpr double kRangeSlack = 1e-9;

void check_range(double epsilon, double hi, const char* kind) {
  if (epsilon < -kRangeSlack || epsilon > hi + kRangeSlack) {
    throw std::invalid_argument(
        "epsilon " + std::to_string(epsilon) + " outside admissible interval [0, " +
        std::to_string(hi) + "] for " + kind);
  }
}
}  // namespace

std::string to_string(ConstructionKind kind) {
  switch (kind) {
    case ConstructionKind::kSpanner1: return "spanner1";
    case ConstructionKind::kEmulator: return "emulator";
    case ConstructionKind::kSpanner2: return "spanner2";
  }
  return "unknown";
}

ConstructionKind parse_construction_kind(std::string_view name) {
  if (name == "spanner1") return ConstructionKind::kSpanner1;
  if (name == "emulator") return ConstructionKind::kEmulator;
  if (name == "spanner2") return ConstructionKind::kSpanner2;
  throw std::invalid_argument("unknown construction kind: " + std::string(name) +
                              " (expected spanner1, emulator, or spanner2)");
}

long long ceil_power(Vertex n, double exponent) {
  if (n <= 0) return 0;
  const double value = std::pow(static_cast<double>(n), exponent);
  return static_cast<long long>(std::ceil(value - 1e-9));
}

ParameterSchedule schedule(ConstructionKind kind, Vertex n, double epsilon) {
  if (n < 1) throw std::invalid_argument("schedule requires n >= 1");
  ParameterSchedule s;
  s.kind = kind;
  s.n = n;
  s.epsilon = epsilon;
  switch (kind) {
    case ConstructionKind::kSpanner1:
      check_range(epsilon, 1.0, "spanner1");
      s.mu = 0.5 - epsilon / 2.0;
      s.delta = 0.5 - epsilon / 2.0;
      s.d = kUnboundedLength;
      break;
    case ConstructionKind::kEmulator:
      check_range(epsilon, 0.2, "emulator");
      s.mu = 1.0 / 6.0 - 5.0 * epsilon / 6.0;
      s.delta = 1.0 / 3.0 - 2.0 * epsilon / 3.0;
      break;
    case ConstructionKind::kSpanner2:
      check_range(epsilon, 0.25, "spanner2");
      s.mu = 1.0 / 3.0 - 4.0 * epsilon / 3.0;
      s.delta = 2.0 / 3.0 - 5.0 * epsilon / 3.0;
      break;
  }
  if (s.mu < 0.0 && s.mu > -kRangeSlack) s.mu = 0.0;
  s.e = static_cast<int>(ceil_power(n, epsilon));
  s.m = static_cast<int>(std::max<long long>(1, ceil_power(n, s.mu)));
  if (kind != ConstructionKind::kSpanner1) {
    const long long nd = ceil_power(n, s.delta);
    s.d = static_cast<int>(std::max<long long>(1, nd));
    s.clean_threshold = nd;
    s.strip_threshold =
        static_cast<long long>(std::ceil(std::pow(static_cast<double>(n), s.delta) / 2.0 - 1e-9));
    if (s.strip_threshold < 1) s.strip_threshold = 1;
    if (s.clean_threshold < 1) s.clean_threshold = 1;
  }
  return s;
}

}  // namespace stripspan
