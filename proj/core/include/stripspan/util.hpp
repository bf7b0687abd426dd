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

#ifndef STRIPSPAN_UTIL_HPP_
#define STRIPSPAN_UTIL_HPP_

#include <cstdint>
#include <functional>
#include <string_view>

namespace stripspan {

/// splitmix64 mixer; stable across platforms, unlike std::hash.
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// FNV-1a over bytes; used for provenance hashes in output files.
std::uint64_t fnv1a64(std::string_view bytes);

/// Number of workers for parallel loops: STRIPSPAN_WORKERS env var if set,
/// otherwise hardware concurrency (at least 1).
int worker_count();

/// Runs fn(i) for i in [0, n) on worker_count() threads. Work items must be
/// independent; any deterministic merge is the caller's job. Exceptions from
/// workers are rethrown on the calling thread.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace stripspan

#endif  // STRIPSPAN_UTIL_HPP_
