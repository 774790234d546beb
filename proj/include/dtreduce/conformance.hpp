// Copyright 2026 The dtreduce Authors
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


#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "dtreduce/levels.hpp"
#include "dtreduce/reducer.hpp"

namespace dtr {

/// A (level, placement, expected verdict) triple for replay by other
/// implementations of the win check.
struct Fixture {
  std::string level;
  Placement placement;
  WinCheck expected;
  std::string kind;
};

/// Kind of a checked placement: "win" or "stacked-win" (some spot holds
/// three or more vertices), "no-vacancy", "strayed", "red-edge" for single
/// failures, "mixed" otherwise.
inline std::string fixture_kind(const Placement& p, const WinCheck& w) {
  if (w.won()) {
    std::vector<int> load(p.spot.size(), 0);
    int deepest = 0;
    for (Vertex s : p.spot) deepest = std::max(deepest, ++load[s]);
    return deepest >= 3 ? "stacked-win" : "win";
  }
  const int failures = (w.vacancy ? 0 : 1) + (w.strayed.empty() ? 0 : 1) + (w.red_edges.empty() ? 0 : 1);
  if (failures > 1) return "mixed";
  if (!w.vacancy) return "no-vacancy";
  if (!w.strayed.empty()) return "strayed";
  return "red-edge";
}

/// Up to one fixture of each kind per level: the solver's witness, the
/// identity placement and seeded random placements (local and arbitrary).
inline std::vector<Fixture> make_fixtures(const std::vector<Level>& levels, std::uint32_t seed = 87,
                                          int samples_per_level = 400) {
  std::mt19937 rng(seed);
  std::vector<Fixture> out;
  for (const Level& level : levels) {
    const std::size_t n = level.graph.order();
    if (n == 0) continue;
    std::set<std::string> have;
    auto offer = [&](Placement p) {
      WinCheck w = check_win(level, p);
      std::string kind = fixture_kind(p, w);
      if (!have.insert(kind).second) return;
      out.push_back({level.id, std::move(p), std::move(w), std::move(kind)});
    };
    if (auto verdict = find_reduction(level.graph); verdict.reducible()) {
      offer(Placement{*verdict.witness});
    }
    offer(Placement::identity(n));
    for (int s = 0; s < samples_per_level; ++s) {
      Placement p;
      const bool local = s % 2 == 0;
      for (Vertex v = 0; v < n; ++v) {
        if (local) {
          const auto nb = closed_neighborhood(level.graph, v);
          p.spot.push_back(nb[rng() % nb.size()]);
        } else {
          p.spot.push_back(static_cast<Vertex>(rng() % n));
        }
      }
      offer(std::move(p));
    }
  }
  return out;
}

inline std::string dump_fixtures(const std::vector<Fixture>& fixtures) {
  std::string out = "{\"fixtures\":[";
  for (std::size_t i = 0; i < fixtures.size(); ++i) {
    const auto& f = fixtures[i];
    nlohmann::ordered_json j;
    j["level"] = f.level;
    j["spot"] = f.placement.spot;
    j["kind"] = f.kind;
    j["expect"] = win_check_to_json(f.expected);
    out += (i == 0 ? "\n" : ",\n") + j.dump();
  }
  return out + "\n]}\n";
}

}  // namespace dtr
