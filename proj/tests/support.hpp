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


// Shared test fixtures: graphs transcribed from the figures, and naive
// oracles that deliberately share no code paths with the library's search,
// canonical labeling or enumeration.

#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <random>
#include <tuple>
#include <unordered_map>
#include <utility>
#include <vector>

#include "dtreduce/graph.hpp"
#include "dtreduce/isomorphism.hpp"
#include "dtreduce/pixels.hpp"

namespace dtr::testing {

// Figure vertex ids encode lattice points as 10 * (8 - y) + x.
inline Point figure_point(int id) { return {id % 10, 8 - id / 10}; }

inline constexpr std::array<std::pair<int, int>, 40> kPappyFourEdges = {{{12, 13}, {13, 14}, {14, 15}, {15, 16}, {16, 17}, {19, 9}, {20, 21}, {21, 22}, {22, 12}, {24, 25}, {24, 14}, {25, 15}, {27, 28}, {27, 17}, {28, 29}, {29, 19}, {30, 20}, {32, 33}, {32, 22}, {33, 34}, {34, 35}, {34, 24}, {35, 36}, {35, 25}, {36, 37}, {37, 27}, {40, 30}, {42, 32}, {47, 37}, {52, 53}, {52, 42}, {56, 57}, {57, 47}, {63, 64}, {63, 53}, {64, 65}, {65, 66}, {66, 56}, {82, 72}, {87, 77}}};
inline constexpr std::array<std::pair<int, int>, 68> kPappyEightEdges = {{{12, 13}, {13, 14}, {13, 24}, {14, 15}, {14, 25}, {15, 16}, {16, 17}, {16, 27}, {17, 28}, {19, 9}, {20, 21}, {21, 22}, {21, 12}, {21, 32}, {22, 12}, {22, 13}, {22, 33}, {24, 25}, {24, 14}, {24, 15}, {24, 35}, {25, 15}, {25, 16}, {25, 36}, {27, 28}, {27, 17}, {28, 29}, {28, 19}, {29, 19}, {30, 20}, {30, 21}, {32, 33}, {32, 22}, {33, 34}, {33, 24}, {34, 35}, {34, 24}, {34, 25}, {35, 36}, {35, 25}, {36, 37}, {36, 27}, {36, 47}, {37, 27}, {37, 28}, {40, 30}, {42, 32}, {42, 33}, {42, 53}, {47, 37}, {52, 53}, {52, 42}, {52, 63}, {53, 64}, {56, 57}, {56, 47}, {57, 47}, {63, 64}, {63, 53}, {64, 65}, {65, 66}, {65, 56}, {66, 56}, {66, 57}, {66, 77}, {72, 63}, {82, 72}, {87, 77}}};
inline constexpr std::array<std::pair<int, int>, 30> kPappyFourReducedEdges = {{{12, 13}, {13, 14}, {14, 15}, {15, 16}, {16, 17}, {22, 12}, {24, 25}, {24, 14}, {25, 15}, {27, 17}, {32, 33}, {32, 22}, {33, 34}, {34, 35}, {34, 24}, {35, 36}, {35, 25}, {36, 37}, {37, 27}, {42, 32}, {47, 37}, {52, 53}, {52, 42}, {56, 57}, {57, 47}, {63, 64}, {63, 53}, {64, 65}, {65, 66}, {66, 56}}};
inline constexpr std::array<int, 28> kPappyFourReducedIds = {12, 13, 14, 15, 16, 17, 22, 24, 25, 27, 32, 33, 34, 35, 36, 37, 42, 47, 52, 53, 56, 57, 63, 64, 65, 66, 82, 87};

/// Maps figure-id edges onto from_pixels vertex ids of `image`.
template <std::size_t N>
Graph figure_graph(const PixelImage& image, const std::array<std::pair<int, int>, N>& edges) {
  const auto& pts = image.points();
  auto index = [&](int id) {
    auto it = std::find(pts.begin(), pts.end(), figure_point(id));
    return static_cast<Vertex>(it - pts.begin());
  };
  Graph g(pts.size());
  for (auto [a, b] : edges) g.add_edge(index(a), index(b));
  return g;
}

// Outer 5-cycle a..e (0..4, counter-clockwise from the top) and a center
// vertex 5 joined to a and d.
inline Graph twisted_pentagon() {
  return Graph(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {5, 0}, {5, 3}});
}

// Rotate the rim one step counter-clockwise, send the center to the top.
inline const std::vector<Vertex> kTwistWitness = {1, 2, 3, 4, 0, 0};

// 6-cycle plus a vertex joined to two opposite rim vertices.
inline Graph hexagon_with_spoke() {
  return Graph(7, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}, {6, 0}, {6, 3}});
}

// 5-cycle a..e with a path d - g - f - a and an extra edge g - c.
inline Graph pentagon_with_handle() {
  // a=0 b=1 c=2 d=3 e=4 f=5 g=6
  return Graph(7, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {3, 6}, {6, 2}, {6, 5}, {5, 0}});
}

/// The irreducible graphs with at most 7 points, as drawn.
inline std::vector<Graph> small_irreducible_catalog() {
  return {Graph(1), cycle_graph(5), cycle_graph(6), cycle_graph(7), hexagon_with_spoke(),
          pentagon_with_handle()};
}

// ---------------------------------------------------------------------------
// Oracles

/// Adjacent-or-equal, straight from the edge relation.
inline bool adjacent_or_equal(const Graph& g, Vertex a, Vertex b) {
  return a == b || g.adjacent(a, b);
}

/// Checks the three reduction conditions literally.
inline bool naive_is_reduction(const Graph& g, const std::vector<Vertex>& f) {
  const std::size_t n = g.order();
  std::vector<bool> hit(n, false);
  for (Vertex x = 0; x < n; ++x) hit[f[x]] = true;
  if (std::all_of(hit.begin(), hit.end(), [](bool b) { return b; })) return false;
  for (Vertex x = 0; x < n; ++x) {
    if (!adjacent_or_equal(g, x, f[x])) return false;
  }
  for (Vertex x = 0; x < n; ++x) {
    for (Vertex y = 0; y < n; ++y) {
      if (adjacent_or_equal(g, x, y) && !adjacent_or_equal(g, f[x], f[y])) return false;
    }
  }
  return true;
}

/// Calls fn(f) for every one of the n^n self-maps, in lexicographic order.
template <typename Fn>
void for_each_self_map(std::size_t n, Fn&& fn) {
  std::vector<Vertex> f(n, 0);
  while (true) {
    fn(f);
    std::size_t i = n;
    while (i > 0 && f[i - 1] + 1 == n) f[--i] = 0;
    if (i == 0) return;
    ++f[i - 1];
  }
}

/// All reductions by exhaustive search over self-maps.
inline std::vector<std::vector<Vertex>> brute_force_reductions(const Graph& g) {
  std::vector<std::vector<Vertex>> out;
  if (g.order() == 0) return out;
  for_each_self_map(g.order(), [&](const std::vector<Vertex>& f) {
    if (naive_is_reduction(g, f)) out.push_back(f);
  });
  return out;
}

inline bool brute_force_reducible(const Graph& g) {
  bool found = false;
  if (g.order() == 0) return false;
  for_each_self_map(g.order(), [&](const std::vector<Vertex>& f) {
    found = found || naive_is_reduction(g, f);
  });
  return found;
}

inline bool naive_connected(const Graph& g) {
  const std::size_t n = g.order();
  if (n == 0) return true;
  std::vector<bool> seen(n, false);
  std::vector<Vertex> stack{0};
  seen[0] = true;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (Vertex u = 0; u < n; ++u) {
      if (!seen[u] && g.adjacent(u, v)) {
        seen[u] = true;
        stack.push_back(u);
      }
    }
  }
  return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

/// Permutation-search isomorphism test with no pruning beyond degrees.
inline bool naive_isomorphic(const Graph& g, const Graph& h) {
  if (g.order() != h.order() || g.size() != h.size()) return false;
  std::vector<Vertex> perm(g.order());
  std::iota(perm.begin(), perm.end(), Vertex{0});
  do {
    bool ok = true;
    for (auto [u, v] : g.edges()) {
      if (!h.adjacent(perm[u], perm[v])) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

/// Isomorphism-class representatives of connected labeled graphs on n
/// vertices: enumerate all 2^(n choose 2) edge sets, keep connected ones and
/// deduplicate with the direct isomorphism search inside buckets of equal
/// invariants (degree, neighbor degrees, triangles through each vertex).
inline std::vector<Graph> brute_force_connected_classes(std::size_t n) {
  std::vector<Edge> slots;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) slots.emplace_back(u, v);
  }
  std::unordered_map<std::uint64_t, std::vector<Graph>> buckets;
  std::vector<Graph> reps;
  std::vector<std::uint64_t> profile(n);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << slots.size()); ++mask) {
    Graph g(n);
    for (std::size_t i = 0; i < slots.size(); ++i) {
      if ((mask >> i) & 1U) g.add_edge(slots[i].first, slots[i].second);
    }
    if (!naive_connected(g)) continue;
    for (Vertex v = 0; v < n; ++v) {
      std::uint64_t nd = 0;  // multiset of neighbor degrees as digit counts
      std::uint64_t triangles = 0;
      for (Vertex u = 0; u < n; ++u) {
        if (!g.adjacent(u, v)) continue;
        nd += std::uint64_t{1} << (4 * g.degree(u));
        for (Vertex w = u + 1; w < n; ++w) triangles += g.adjacent(w, v) && g.adjacent(w, u);
      }
      profile[v] = (nd * 64 + triangles) * 16 + g.degree(v);
    }
    std::sort(profile.begin(), profile.end());
    std::uint64_t key = 1469598103934665603ULL;
    for (auto x : profile) key = (key ^ x) * 1099511628211ULL;
    auto& bucket = buckets[key];
    bool fresh = std::none_of(bucket.begin(), bucket.end(),
                              [&](const Graph& h) { return are_isomorphic(g, h); });
    if (fresh) {
      bucket.push_back(g);
      reps.push_back(g);
    }
  }
  return reps;
}

// ---------------------------------------------------------------------------
// Random generators for property tests

inline Graph random_graph(std::mt19937& rng, std::size_t n, double p) {
  std::bernoulli_distribution edge(p);
  Graph g(n);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (edge(rng)) g.add_edge(u, v);
    }
  }
  return g;
}

inline Graph random_connected_graph(std::mt19937& rng, std::size_t n, double p) {
  Graph g = random_graph(rng, n, p);
  // Stitch components together with a random spanning path over them.
  auto comps = components(g);
  for (std::size_t i = 1; i < comps.size(); ++i) {
    auto a = to_vector(comps[i - 1]);
    auto b = to_vector(comps[i]);
    g.add_edge(a[rng() % a.size()], b[rng() % b.size()]);
  }
  return g;
}

inline Graph random_tree(std::mt19937& rng, std::size_t n) {
  Graph g(n);
  for (Vertex v = 1; v < n; ++v) g.add_edge(v, static_cast<Vertex>(rng() % v));
  return g;
}

inline std::vector<Vertex> random_permutation(std::mt19937& rng, std::size_t n) {
  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), Vertex{0});
  std::shuffle(perm.begin(), perm.end(), rng);
  return perm;
}

}  // namespace dtr::testing
