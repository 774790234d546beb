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
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "dtreduce/graph.hpp"
#include "dtreduce/graph6.hpp"

namespace dtr {

/// Largest order whose upper-triangle adjacency fits a 64-bit code.
inline constexpr std::size_t kMaxCanonicalOrder = 11;

/// Relabeling-invariant key of an isomorphism class: the order plus the
/// upper-triangle adjacency bits of the canonically relabeled graph, packed
/// in graph6 bit order with the first bit most significant. Ordering keys
/// compares the graph6 strings of the canonical graphs.
struct CanonicalForm {
  std::uint8_t n = 0;
  std::uint64_t bits = 0;

  friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;

  Graph graph() const {
    Graph g(n);
    int k = n * (n - 1) / 2;
    for (Vertex j = 1; j < n; ++j) {
      for (Vertex i = 0; i < j; ++i) {
        if ((bits >> --k) & 1U) g.add_edge(i, j);
      }
    }
    return g;
  }

  std::string graph6() const { return graph6_encode(graph()); }
};

namespace detail {

// Ordered partition of the vertex set; cells are masks.
using Partition = std::vector<Mask>;

// Splits every cell by its vertices' neighbor counts into each cell of the
// current partition, repeating until stable. Sub-cells are ordered by count
// vector, so the result is equivariant under relabeling.
inline Partition refine(const Graph& g, Partition cells) {
  for (bool changed = true; changed;) {
    changed = false;
    Partition next;
    next.reserve(g.order());
    for (Mask cell : cells) {
      if (count(cell) == 1) {
        next.push_back(cell);
        continue;
      }
      std::vector<std::pair<std::uint64_t, Vertex>> sig;
      for_each_vertex(cell, [&](Vertex v) {
        std::uint64_t s = 0;
        for (Mask c : cells) s = (s << 4) | static_cast<std::uint64_t>(count(g.neighbors(v) & c));
        sig.emplace_back(s, v);
      });
      std::sort(sig.begin(), sig.end());
      Mask part = 0;
      for (std::size_t i = 0; i < sig.size(); ++i) {
        if (i > 0 && sig[i].first != sig[i - 1].first) {
          next.push_back(part);
          part = 0;
          changed = true;
        }
        part |= bit(sig[i].second);
      }
      next.push_back(part);
    }
    cells = std::move(next);
  }
  return cells;
}

class Canonicalizer {
 public:
  explicit Canonicalizer(const Graph& g) : g_(g), n_(g.order()) {}

  void run() {
    std::vector<Vertex> prefix;
    search(Partition{g_.vertices()}, prefix);
  }

  std::uint64_t best_code() const { return best_code_; }
  const std::vector<Vertex>& best_order() const { return best_order_; }
  const std::vector<std::vector<Vertex>>& automorphisms() const { return generators_; }

 private:
  std::uint64_t encode(const std::vector<Vertex>& order) const {
    std::uint64_t code = 0;
    for (std::size_t j = 1; j < n_; ++j) {
      const Mask col = g_.neighbors(order[j]);
      for (std::size_t i = 0; i < j; ++i) code = (code << 1) | (contains(col, order[i]) ? 1U : 0U);
    }
    return code;
  }

  // Orbit representative of each vertex under the found automorphisms that
  // fix every vertex of `prefix`.
  std::vector<Vertex> orbits(const std::vector<Vertex>& prefix) const {
    std::vector<Vertex> parent(n_);
    std::iota(parent.begin(), parent.end(), Vertex{0});
    std::function<Vertex(Vertex)> find = [&](Vertex v) {
      return parent[v] == v ? v : parent[v] = find(parent[v]);
    };
    for (const auto& gen : generators_) {
      bool fixes = std::all_of(prefix.begin(), prefix.end(), [&](Vertex p) { return gen[p] == p; });
      if (!fixes) continue;
      for (Vertex v = 0; v < n_; ++v) {
        Vertex a = find(v), b = find(gen[v]);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
      }
    }
    for (Vertex v = 0; v < n_; ++v) parent[v] = find(v);
    return parent;
  }

  void leaf(const Partition& cells) {
    std::vector<Vertex> order;
    order.reserve(n_);
    for (Mask c : cells) order.push_back(static_cast<Vertex>(std::countr_zero(c)));
    const std::uint64_t code = encode(order);
    if (!have_best_ || code < best_code_) {
      have_best_ = true;
      best_code_ = code;
      best_order_ = std::move(order);
    } else if (code == best_code_) {
      std::vector<Vertex> gamma(n_);
      bool identity = true;
      for (std::size_t i = 0; i < n_; ++i) {
        gamma[order[i]] = best_order_[i];
        identity = identity && order[i] == best_order_[i];
      }
      if (!identity) generators_.push_back(std::move(gamma));
    }
  }

  void search(Partition cells, std::vector<Vertex>& prefix) {
    cells = refine(g_, std::move(cells));
    if (cells.size() == n_) {
      leaf(cells);
      return;
    }
    std::size_t target = cells.size();
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (count(cells[i]) > 1 && (target == cells.size() || count(cells[i]) < count(cells[target]))) {
        target = i;
      }
    }
    const Mask cell = cells[target];
    std::vector<Vertex> explored;
    for (Vertex w : to_vector(cell)) {
      if (!explored.empty()) {
        auto orbit = orbits(prefix);
        bool equivalent = std::any_of(explored.begin(), explored.end(),
                                      [&](Vertex e) { return orbit[e] == orbit[w]; });
        if (equivalent) continue;
      }
      Partition child;
      child.reserve(cells.size() + 1);
      child.insert(child.end(), cells.begin(), cells.begin() + static_cast<std::ptrdiff_t>(target));
      child.push_back(bit(w));
      child.push_back(cell & ~bit(w));
      child.insert(child.end(), cells.begin() + static_cast<std::ptrdiff_t>(target) + 1, cells.end());
      prefix.push_back(w);
      search(std::move(child), prefix);
      prefix.pop_back();
      explored.push_back(w);
    }
  }

  const Graph& g_;
  std::size_t n_;
  bool have_best_ = false;
  std::uint64_t best_code_ = 0;
  std::vector<Vertex> best_order_;
  std::vector<std::vector<Vertex>> generators_;
};

}  // namespace detail

/// Canonical vertex order: position i of the canonical graph holds vertex
/// order[i] of g. Requires order <= kMaxCanonicalOrder.
///
/// Cells of an equitable partition are split by individualizing each of
/// their vertices in turn; among the resulting discrete orders the one with
/// the least adjacency code wins. Branches equivalent under automorphisms
/// found along the way are skipped.
inline std::vector<Vertex> canonical_order(const Graph& g) {
  if (g.order() > kMaxCanonicalOrder) {
    throw std::invalid_argument("canonical labeling supports at most 11 vertices, got " +
                                std::to_string(g.order()));
  }
  if (g.empty()) return {};
  detail::Canonicalizer c(g);
  c.run();
  return c.best_order();
}

inline CanonicalForm canonical_form(const Graph& g) {
  if (g.order() > kMaxCanonicalOrder) {
    throw std::invalid_argument("canonical labeling supports at most 11 vertices, got " +
                                std::to_string(g.order()));
  }
  if (g.empty()) return {};
  detail::Canonicalizer c(g);
  c.run();
  return {static_cast<std::uint8_t>(g.order()), c.best_code()};
}

inline Graph canonical_graph(const Graph& g) { return canonical_form(g).graph(); }

}  // namespace dtr

template <>
struct std::hash<dtr::CanonicalForm> {
  std::size_t operator()(const dtr::CanonicalForm& k) const noexcept {
    return std::hash<std::uint64_t>{}(k.bits * 0x9E3779B97F4A7C15ULL ^ k.n);
  }
};
