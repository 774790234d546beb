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

#include <array>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <vector>

#include "dtreduce/graph.hpp"

namespace dtr {

/// A self-map on the vertices of a host graph: vertex x goes to f[x].
///
/// It is a reduction when
///   (R1) it is not onto,
///   (R2) f[x] is x or a neighbor of x, and
///   (R3) adjacent x, y land on equal or adjacent vertices.
using ReductionMap = std::vector<Vertex>;

/// Which reduction conditions a map violates, and where.
struct ReductionCheck {
  /// Vertices outside the image of f. R1 holds iff this is nonzero.
  Mask vacated = 0;
  /// Vertices x with f[x] outside N[x] (R2).
  std::vector<Vertex> non_local;
  /// Edges whose endpoints end up neither equal nor adjacent (R3).
  std::vector<Edge> broken_edges;

  bool has_vacancy() const noexcept { return vacated != 0; }
  bool ok() const noexcept {
    return has_vacancy() && non_local.empty() && broken_edges.empty();
  }
};

inline void require_total_map(const Graph& g, const ReductionMap& f) {
  if (f.size() != g.order()) {
    throw std::invalid_argument("map has " + std::to_string(f.size()) +
                                " entries for a graph of order " + std::to_string(g.order()));
  }
  for (Vertex x = 0; x < f.size(); ++x) {
    if (f[x] >= g.order()) {
      throw std::invalid_argument("map sends vertex " + std::to_string(x) + " to " +
                                  std::to_string(f[x]) + ", which is not a vertex");
    }
  }
}

inline ReductionCheck diagnose_reduction(const Graph& g, const ReductionMap& f) {
  require_total_map(g, f);
  ReductionCheck out;
  Mask image = 0;
  for (Vertex x = 0; x < g.order(); ++x) {
    image |= bit(f[x]);
    if (!contains(g.closed_neighbors(x), f[x])) out.non_local.push_back(x);
  }
  out.vacated = g.vertices() & ~image;
  for (auto [u, v] : g.edges()) {
    if (!contains(g.closed_neighbors(f[u]), f[v])) out.broken_edges.emplace_back(u, v);
  }
  return out;
}

inline bool verify_reduction(const Graph& g, const ReductionMap& f) {
  return diagnose_reduction(g, f).ok();
}

struct ReductionVerdict {
  std::optional<ReductionMap> witness;

  bool reducible() const noexcept { return witness.has_value(); }
};

namespace detail {

struct SearchOptions {
  bool min_remaining_values = true;  // else assign 0, 1, 2, ... in order
  bool self_first = true;            // try f[x] = x before ascending order
};

using Domains = std::array<Mask, kMaxVertices>;

// Depth-first assignment with forward checking of R3. Returns true once the
// visitor asks to stop.
template <typename Visit>
bool assign(const Graph& g, const Domains& domains, Mask unassigned, ReductionMap& f,
            const SearchOptions& opt, Visit& visit) {
  if (unassigned == 0) return visit(static_cast<const ReductionMap&>(f));

  Vertex x = static_cast<Vertex>(std::countr_zero(unassigned));
  if (opt.min_remaining_values) {
    int best = count(domains[x]);
    for_each_vertex(unassigned, [&](Vertex y) {
      if (count(domains[y]) < best) {
        best = count(domains[y]);
        x = y;
      }
    });
  }

  const Mask rest = unassigned & ~bit(x);
  const Mask open_neighbors = g.neighbors(x) & rest;

  auto try_value = [&](Vertex a) {
    Domains next = domains;
    const Mask allowed = g.closed_neighbors(a);
    bool wiped = false;
    for_each_vertex(open_neighbors, [&](Vertex y) {
      next[y] &= allowed;
      wiped = wiped || next[y] == 0;
    });
    if (wiped) return false;
    f[x] = a;
    return assign(g, next, rest, f, opt, visit);
  };

  Mask values = domains[x];
  if (opt.self_first && contains(values, x)) {
    if (try_value(x)) return true;
    values &= ~bit(x);
  }
  while (values != 0) {
    const auto a = static_cast<Vertex>(std::countr_zero(values));
    values &= values - 1;
    if (try_value(a)) return true;
  }
  return false;
}

}  // namespace detail

/// Backtracking search for one reduction.
///
/// Candidate vacated vertices v are tried in ascending order. For each, every
/// x is restricted to N[x] minus v, vertices are assigned
/// minimum-remaining-values first (ties to the smaller id), each vertex tries
/// staying put before other targets in ascending order, and R3 is forward
/// checked against unassigned neighbors. The result is deterministic.
inline ReductionVerdict find_reduction(const Graph& g) {
  const std::size_t n = g.order();
  const detail::SearchOptions opt;
  ReductionMap f(n);
  for (Vertex vacated = 0; vacated < n; ++vacated) {
    detail::Domains domains{};
    bool feasible = true;
    for (Vertex x = 0; x < n; ++x) {
      domains[x] = g.closed_neighbors(x) & ~bit(vacated);
      feasible = feasible && domains[x] != 0;
    }
    if (!feasible) continue;
    bool found = false;
    auto stop = [&](const ReductionMap&) { return found = true; };
    detail::assign(g, domains, g.vertices(), f, opt, stop);
    if (found) return {f};
  }
  return {};
}

inline bool is_reducible(const Graph& g) { return find_reduction(g).reducible(); }

/// Streams every reduction of g in lexicographic order of (f[0], f[1], ...).
/// `visit` may return bool; returning false stops the stream.
template <typename Visit>
void for_each_reduction(const Graph& g, Visit&& visit) {
  const std::size_t n = g.order();
  detail::Domains domains{};
  for (Vertex x = 0; x < n; ++x) domains[x] = g.closed_neighbors(x);
  ReductionMap f(n);
  const Mask all = g.vertices();
  auto leaf = [&](const ReductionMap& m) {
    Mask image = 0;
    for (Vertex y : m) image |= bit(y);
    if (image == all) return false;
    if constexpr (std::is_same_v<std::invoke_result_t<Visit&, const ReductionMap&>, bool>) {
      return !visit(m);
    } else {
      visit(m);
      return false;
    }
  };
  detail::assign(g, domains, all, f, {.min_remaining_values = false, .self_first = false},
                 leaf);
}

/// All reductions of g; intended for n <= 8.
inline std::vector<ReductionMap> enumerate_reductions(const Graph& g) {
  std::vector<ReductionMap> out;
  for_each_reduction(g, [&](const ReductionMap& f) { out.push_back(f); });
  return out;
}

struct ReductionStep {
  /// Induced subgraph on the image of f.
  Graph graph;
  /// kept[i] is the old id of new vertex i, ascending.
  std::vector<Vertex> kept;
  /// New id of each old vertex; empty for vacated vertices.
  std::vector<std::optional<Vertex>> old_to_new;
};

inline ReductionStep reduce_step(const Graph& g, const ReductionMap& f) {
  if (!verify_reduction(g, f)) throw std::invalid_argument("map is not a reduction");
  Mask image = 0;
  for (Vertex y : f) image |= bit(y);
  ReductionStep step;
  step.kept = to_vector(image);
  step.graph = g.induced(std::span<const Vertex>(step.kept));
  step.old_to_new.resize(g.order());
  for (Vertex i = 0; i < step.kept.size(); ++i) step.old_to_new[step.kept[i]] = i;
  return step;
}

struct FullReduction {
  Graph graph;
  /// Original ids of the surviving vertices; kept[i] is new vertex i.
  std::vector<Vertex> kept;
  std::size_t steps = 0;
};

/// Reduces each component to an irreducible graph and reassembles them in
/// component order (components ordered by their smallest vertex).
inline FullReduction reduce_fully_tracked(const Graph& g) {
  FullReduction out;
  for (Mask comp : components(g)) {
    std::vector<Vertex> ids = to_vector(comp);
    Graph part = g.induced(std::span<const Vertex>(ids));
    for (auto verdict = find_reduction(part); verdict.reducible();
         verdict = find_reduction(part)) {
      ReductionStep step = reduce_step(part, *verdict.witness);
      std::vector<Vertex> survivors;
      survivors.reserve(step.kept.size());
      for (Vertex k : step.kept) survivors.push_back(ids[k]);
      ids = std::move(survivors);
      part = std::move(step.graph);
      ++out.steps;
    }
    out.graph = disjoint_union(out.graph, part);
    out.kept.insert(out.kept.end(), ids.begin(), ids.end());
  }
  return out;
}

inline Graph reduce_fully(const Graph& g) { return reduce_fully_tracked(g).graph; }

}  // namespace dtr
