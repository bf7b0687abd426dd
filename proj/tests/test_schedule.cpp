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

#include <stdexcept>

#include "doctest.h"
#include "stripspan/bounds.hpp"
#include "stripspan/strips.hpp"

using namespace stripspan;

TEST_CASE("emulator schedule endpoints") {
  SUBCASE("eps = 1/5 sits on the mu = 0 boundary") {
    const auto s = schedule(ConstructionKind::kEmulator, 1024, 0.2);
    CHECK(s.mu == doctest::Approx(0.0));
    CHECK(s.delta == doctest::Approx(0.2));
    CHECK(s.m == 1);
  }
  SUBCASE("eps = 0") {
    const auto s = schedule(ConstructionKind::kEmulator, 1024, 0.0);
    CHECK(s.mu == doctest::Approx(1.0 / 6.0));
    CHECK(s.delta == doctest::Approx(1.0 / 3.0));
    CHECK(s.e == 1);
    CHECK(s.d == 11);               // ceil(1024^(1/3)) = ceil(10.08)
    CHECK(s.clean_threshold == 11);
    CHECK(s.strip_threshold == 6);  // ceil(10.08 / 2)
  }
  SUBCASE("out of range")  {
    CHECK_THROWS_WITH_AS(schedule(ConstructionKind::kEmulator, 64, 0.25),
                         doctest::Contains("0.2"), std::invalid_argument);
  }
}

TEST_CASE("spanner2 schedule endpoints") {
  const auto s = schedule(ConstructionKind::kSpanner2, 512, 0.25);
  CHECK(s.mu == doctest::Approx(0.0));
  CHECK(s.delta == doctest::Approx(0.25));
  CHECK(s.m == 1);
  CHECK_THROWS_AS(schedule(ConstructionKind::kSpanner2, 512, 0.3),
                  std::invalid_argument);
}

TEST_CASE("spanner1 schedule") {
  const auto s = schedule(ConstructionKind::kSpanner1, 1024, 0.0);
  CHECK(s.e == 1);
  CHECK(s.m == 32);  // ceil(1024^0.5)
  CHECK(s.d == kUnboundedLength);
  CHECK(schedule(ConstructionKind::kSpanner1, 100, 1.0).e == 100);
  CHECK_THROWS_AS(schedule(ConstructionKind::kSpanner1, 100, 1.1),
                  std::invalid_argument);
}

TEST_CASE("ceil_power avoids floating point fuzz on exact powers") {
  CHECK(ceil_power(1024, 0.1) == 2);    // 1024^0.1 = 2 exactly
  CHECK(ceil_power(1024, 0.5) == 32);
  CHECK(ceil_power(2048, 1.0 / 3.0) == 13);
  CHECK(ceil_power(7, 0.0) == 1);
}

TEST_CASE("construction kind round-trips through names") {
  for (auto kind : {ConstructionKind::kSpanner1, ConstructionKind::kEmulator,
                    ConstructionKind::kSpanner2}) {
    CHECK(parse_construction_kind(to_string(kind)) == kind);
  }
  CHECK_THROWS_AS(parse_construction_kind("spanner3"), std::invalid_argument);
}

TEST_CASE("pinned bound formulas") {
  CHECK(log2_ceil(1024) == 10);
  CHECK(log2_ceil(1025) == 11);
  CHECK(distortion_bound(ConstructionKind::kSpanner1, 1024, 0.0) ==
        doctest::Approx(32.0 * 32.0 * 10.0));
  CHECK(artifact_edge_bound(ConstructionKind::kSpanner1, 1024, 0.0) ==
        doctest::Approx(20.0 * 1024.0));
  CHECK(hitting_set_bound(ConstructionKind::kEmulator, 1024, 0.0) ==
        doctest::Approx(8.0 * 32.0 * 10.0));
}
