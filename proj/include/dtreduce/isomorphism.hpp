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
#include <vector>

#include "dtreduce/graph.hpp"

namespace dtr {

namespace detail {

inline bool extend_isomorphism(const Graph& g, const Graph& h, std::vector<Vertex>& image,
                               Mask used, Vertex next) {
  if (next == g.order()) return true;
  for (Vertex cand = 0; cand < h.order(); ++cand) {
    if (contains(used, cand) || g.degree(next) != h.degree(cand)) continue;
    bool ok = true;
    for (Vertex prev = 0; prev < next && ok; ++prev) {
      ok = g.adjacent(next, prev) == h.adjacent(cand, image[prev]);
    }
    if (!ok) continue;
    image[next] = cand;
    if (extend_isomorphism(g, h, image, used | bit(cand), next + 1)) return true;
  }
  return false;
}

}  // namespace detail

/// Direct search for an edge-preserving bijection, pruned by degree.
/// Intended for small graphs (n <= 10); it does not use canonical forms, so
/// it can serve as an independent check on them.
inline bool are_isomorphic(const Graph& g, const Graph& h) {
  if (g.order() != h.order() || g.size() != h.size()) return false;
  std::vector<std::size_t> dg, dh;
  for (Vertex v = 0; v < g.order(); ++v) {
    dg.push_back(g.degree(v));
    dh.push_back(h.degree(v));
  }
  std::sort(dg.begin(), dg.end());
  std::sort(dh.begin(), dh.end());
  if (dg != dh) return false;
  std::vector<Vertex> image(g.order());
  return detail::extend_isomorphism(g, h, image, 0, 0);
}

}  // namespace dtr
