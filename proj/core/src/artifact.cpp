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

#include "stripspan/artifact.hpp"

#include <sstream>
#include <stdexcept>

#include "json.hpp"

#include "stripspan/strips.hpp"
#include "stripspan/util.hpp"

namespace stripspan {

namespace {

nlohmann::json schedule_json(const ParameterSchedule& s) {
  nlohmann::json j;
  j["kind"] = to_string(s.kind);
  j["n"] = s.n;
  j["epsilon"] = s.epsilon;
  j["mu"] = s.mu;
  j["delta"] = s.delta;
  j["e"] = s.e;
  j["m"] = s.m;
  if (s.d == kUnboundedLength) {
    j["d"] = "inf";
  } else {
    j["d"] = s.d;
  }
  j["strip_threshold"] = s.strip_threshold;
  j["clean_threshold"] = s.clean_threshold;
  return j;
}

ParameterSchedule schedule_from_json(const nlohmann::json& j) {
  ParameterSchedule s;
  s.kind = parse_construction_kind(j.at("kind").get<std::string>());
  s.n = j.at("n").get<Vertex>();
  s.epsilon = j.at("epsilon").get<double>();
  s.mu = j.at("mu").get<double>();
  s.delta = j.at("delta").get<double>();
  s.e = j.at("e").get<int>();
  s.m = j.at("m").get<int>();
  if (j.at("d").is_string()) {
    s.d = kUnboundedLength;
  } else {
    s.d = j.at("d").get<int>();
  }
  s.strip_threshold = j.at("strip_threshold").get<long long>();
  s.clean_threshold = j.at("clean_threshold").get<long long>();
  return s;
}

}  // namespace

std::array<std::size_t, 4> SparseArtifact::source_counts() const {
  std::array<std::size_t, 4> counts{0, 0, 0, 0};
  for (EdgeSource src : edge_sources) {
    ++counts[static_cast<std::size_t>(src)];
  }
  return counts;
}

std::string to_string(ArtifactKind kind) {
  return kind == ArtifactKind::kSpanner ? "spanner" : "emulator";
}

std::string to_json(const SparseArtifact& a) {
  nlohmann::json j;
  j["kind"] = to_string(a.kind);
  j["n"] = a.n;
  j["epsilon"] = a.epsilon;
  auto edges = nlohmann::json::array();
  for (const Edge& e : a.subgraph_edges) {
    edges.push_back(nlohmann::json::array({e.u, e.v}));
  }
  j["subgraph_edges"] = std::move(edges);
  auto weighted = nlohmann::json::array();
  for (const WeightedEdge& e : a.weighted_edges) {
    weighted.push_back(nlohmann::json::array({e.u, e.v, e.weight}));
  }
  j["weighted_edges"] = std::move(weighted);
  nlohmann::json counts;
  const auto sc = a.source_counts();
  for (std::size_t i = 0; i < sc.size(); ++i) {
    counts[kEdgeSourceNames[i]] = sc[i];
  }
  counts["emulator-shortcut"] = a.weighted_edges.size();
  j["provenance_counts"] = std::move(counts);
  j["hitting_set"] = a.hitting_set;
  j["schedule"] = schedule_json(a.schedule);
  return j.dump();
}

SparseArtifact artifact_from_json(std::string_view text) {
  nlohmann::json j = nlohmann::json::parse(text);
  SparseArtifact a;
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "spanner") {
    a.kind = ArtifactKind::kSpanner;
  } else if (kind == "emulator") {
    a.kind = ArtifactKind::kEmulator;
  } else {
    throw std::invalid_argument("unknown artifact kind: " + kind);
  }
  a.n = j.at("n").get<Vertex>();
  a.epsilon = j.at("epsilon").get<double>();
  a.schedule = schedule_from_json(j.at("schedule"));
  const auto& counts = j.at("provenance_counts");
  std::vector<EdgeSource> order;
  for (const auto& row : j.at("subgraph_edges")) {
    a.subgraph_edges.push_back(make_edge(row.at(0).get<Vertex>(),
                                         row.at(1).get<Vertex>()));
  }
  // Per-edge tags are serialized as counts only; loading distributes tags by
  // count over the sorted edge order, preserving totals for reports. Audits
  // that need exact per-edge provenance work from freshly built artifacts.
  a.edge_sources.reserve(a.subgraph_edges.size());
  for (std::size_t i = 0; i < kEdgeSourceNames.size(); ++i) {
    const auto it = counts.find(kEdgeSourceNames[i]);
    if (it == counts.end()) continue;
    for (std::size_t k = 0; k < it->get<std::size_t>(); ++k) {
      a.edge_sources.push_back(static_cast<EdgeSource>(i));
    }
  }
  if (a.edge_sources.size() != a.subgraph_edges.size()) {
    throw std::invalid_argument("provenance counts do not sum to edge count");
  }
  for (const auto& row : j.at("weighted_edges")) {
    a.weighted_edges.push_back({row.at(0).get<Vertex>(), row.at(1).get<Vertex>(),
                                row.at(2).get<int>()});
  }
  a.hitting_set = j.at("hitting_set").get<std::vector<Vertex>>();
  return a;
}

std::string artifact_hash(const SparseArtifact& a) {
  std::ostringstream hex;
  hex << std::hex;
  hex.width(16);
  hex.fill('0');
  hex << fnv1a64(to_json(a));
  return hex.str();
}

}  // namespace stripspan
