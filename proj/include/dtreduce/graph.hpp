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
#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace dtr {

/// Vertices are dense ids 0..n-1.
using Vertex = std::uint32_t;

/// A set of vertices packed into one machine word. Bit v is vertex v.
using Mask = std::uint64_t;

using Edge = std::pair<Vertex, Vertex>;

inline constexpr std::size_t kMaxVertices = 64;

constexpr Mask bit(Vertex v) noexcept { return Mask{1} << v; }

constexpr bool contains(Mask m, Vertex v) noexcept { return (m >> v) & 1U; }

constexpr int count(Mask m) noexcept { return std::popcount(m); }

constexpr Mask full_mask(std::size_t n) noexcept {
  return n >= 64 ? ~Mask{0} : (Mask{1} << n) - 1;
}

/// Calls fn(v) for each vertex of m in ascending order.
template <typename Fn>
constexpr void for_each_vertex(Mask m, Fn&& fn) {
  while (m != 0) {
    fn(static_cast<Vertex>(std::countr_zero(m)));
    m &= m - 1;
  }
}

inline std::vector<Vertex> to_vector(Mask m) {
  std::vector<Vertex> out;
  out.reserve(static_cast<std::size_t>(count(m)));
  for_each_vertex(m, [&](Vertex v) { out.push_back(v); });
  return out;
}

/// Finite simple undirected graph on at most 64 vertices, stored as one
/// neighbor bitmask per vertex. Adjacency is symmetric and irreflexive.
class Graph {
 public:
  Graph() = default;

  explicit Graph(std::size_t n) : rows_(n, 0) {
    if (n > kMaxVertices) {
      throw std::invalid_argument("graph order " + std::to_string(n) +
                                  " exceeds the supported maximum of 64");
    }
  }

  Graph(std::size_t n, std::span<const Edge> edges) : Graph(n) {
    for (auto [u, v] : edges) add_edge(u, v);
  }

  Graph(std::size_t n, std::initializer_list<Edge> edges)
      : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

  std::size_t order() const noexcept { return rows_.size(); }

  std::size_t size() const noexcept {
    std::size_t twice = 0;
    for (Mask row : rows_) twice += static_cast<std::size_t>(count(row));
    return twice / 2;
  }

  bool empty() const noexcept { return rows_.empty(); }

  bool adjacent(Vertex u, Vertex v) const {
    check(u);
    check(v);
    return contains(rows_[u], v);
  }

  Mask neighbors(Vertex v) const {
    check(v);
    return rows_[v];
  }

  Mask closed_neighbors(Vertex v) const { return neighbors(v) | bit(v); }

  std::size_t degree(Vertex v) const {
    return static_cast<std::size_t>(count(neighbors(v)));
  }

  Mask vertices() const noexcept { return full_mask(order()); }

  /// Self-loops are rejected; repeated edges are idempotent.
  void add_edge(Vertex u, Vertex v) {
    check(u);
    check(v);
    if (u == v) {
      throw std::invalid_argument("self-loop on vertex " + std::to_string(u));
    }
    rows_[u] |= bit(v);
    rows_[v] |= bit(u);
  }

  void remove_edge(Vertex u, Vertex v) {
    check(u);
    check(v);
    rows_[u] &= ~bit(v);
    rows_[v] &= ~bit(u);
  }

  /// Edge list with u < v, sorted lexicographically.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    for (Vertex u = 0; u < order(); ++u) {
      for_each_vertex(rows_[u] & ~full_mask(u + 1),
                      [&](Vertex v) { out.emplace_back(u, v); });
    }
    return out;
  }

  /// Induced subgraph on `keep`; keep[i] becomes vertex i.
  Graph induced(std::span<const Vertex> keep) const {
    Graph h(keep.size());
    for (std::size_t i = 0; i < keep.size(); ++i) {
      for (std::size_t j = i + 1; j < keep.size(); ++j) {
        if (adjacent(keep[i], keep[j])) {
          h.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(j));
        }
      }
    }
    return h;
  }

  Graph induced(Mask keep) const {
    auto ids = to_vector(keep);
    return induced(std::span<const Vertex>(ids));
  }

  /// Relabels vertex v as perm[v]. `perm` must be a permutation of 0..n-1.
  Graph permuted(std::span<const Vertex> perm) const {
    if (perm.size() != order()) {
      throw std::invalid_argument("permutation length does not match order");
    }
    Graph h(order());
    for (auto [u, v] : edges()) h.add_edge(perm[u], perm[v]);
    return h;
  }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  void check(Vertex v) const {
    if (v >= rows_.size()) {
      throw std::out_of_range("vertex " + std::to_string(v) +
                              " out of range for graph of order " +
                              std::to_string(rows_.size()));
    }
  }

  std::vector<Mask> rows_;
};

/// N[v]: v together with its neighbors, ascending.
inline std::vector<Vertex> closed_neighborhood(const Graph& g, Vertex v) {
  return to_vector(g.closed_neighbors(v));
}

/// Vertices reachable from `start` (start included).
inline Mask reachable_from(const Graph& g, Vertex start) {
  Mask seen = bit(start);
  Mask frontier = seen;
  while (frontier != 0) {
    Mask next = 0;
    for_each_vertex(frontier, [&](Vertex v) { next |= g.neighbors(v); });
    frontier = next & ~seen;
    seen |= next;
  }
  return seen;
}

/// The empty graph counts as connected.
inline bool is_connected(const Graph& g) {
  if (g.empty()) return true;
  return reachable_from(g, 0) == g.vertices();
}

/// Connected components as vertex masks, ordered by smallest member.
inline std::vector<Mask> components(const Graph& g) {
  std::vector<Mask> out;
  Mask left = g.vertices();
  while (left != 0) {
    Mask c = reachable_from(g, static_cast<Vertex>(std::countr_zero(left)));
    out.push_back(c);
    left &= ~c;
  }
  return out;
}

/// Disjoint union; vertices of b are shifted by a.order().
inline Graph disjoint_union(const Graph& a, const Graph& b) {
  Graph g(a.order() + b.order());
  for (auto [u, v] : a.edges()) g.add_edge(u, v);
  const auto shift = static_cast<Vertex>(a.order());
  for (auto [u, v] : b.edges()) g.add_edge(u + shift, v + shift);
  return g;
}

// Small named families used throughout tests and tools.

inline Graph path_graph(std::size_t n) {
  Graph g(n);
  for (Vertex v = 1; v < n; ++v) g.add_edge(v - 1, v);
  return g;
}

inline Graph cycle_graph(std::size_t n) {
  Graph g = path_graph(n);
  if (n >= 3) g.add_edge(static_cast<Vertex>(n - 1), 0);
  return g;
}

inline Graph complete_graph(std::size_t n) {
  Graph g(n);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) g.add_edge(u, v);
  }
  return g;
}

}  // namespace dtr
