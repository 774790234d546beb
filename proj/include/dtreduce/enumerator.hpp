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
#include <atomic>
#include <cstddef>
#include <fstream>
#include <ostream>
#include <stdexcept>
#include <string>
#include <thread>
#include <unordered_set>
#include <vector>

#include "dtreduce/canonical.hpp"
#include "dtreduce/graph.hpp"
#include "dtreduce/graph6.hpp"
#include "dtreduce/reducer.hpp"

namespace dtr {

inline constexpr std::size_t kMaxEnumerationOrder = 9;

/// One key per isomorphism class of connected graphs of order n, ascending.
///
/// Every connected graph has a vertex whose removal leaves it connected, so
/// attaching a new vertex to every nonempty subset of every (n-1)-class
/// reaches every n-class at least once.
inline std::vector<CanonicalForm> connected_classes(std::size_t n) {
  if (n < 1 || n > kMaxEnumerationOrder) {
    throw std::out_of_range("enumeration order must be in 1..9, got " + std::to_string(n));
  }
  std::vector<CanonicalForm> level{canonical_form(Graph(1))};
  for (std::size_t k = 2; k <= n; ++k) {
    std::unordered_set<CanonicalForm> seen;
    for (const CanonicalForm& key : level) {
      const Graph base = key.graph();
      Graph grown(k);
      for (auto [u, v] : base.edges()) grown.add_edge(u, v);
      const auto fresh = static_cast<Vertex>(k - 1);
      for (Mask subset = 1; subset <= full_mask(k - 1); ++subset) {
        Graph h = grown;
        for_each_vertex(subset, [&](Vertex u) { h.add_edge(u, fresh); });
        seen.insert(canonical_form(h));
      }
    }
    level.assign(seen.begin(), seen.end());
    std::sort(level.begin(), level.end());
  }
  return level;
}

/// Canonical representatives of the connected classes of order n, in key order.
inline std::vector<Graph> enumerate_connected(std::size_t n) {
  std::vector<Graph> out;
  for (const auto& key : connected_classes(n)) out.push_back(key.graph());
  return out;
}

struct CatalogEntry {
  Graph graph;
  std::size_t n = 0;
  CanonicalForm canonical;
};

struct Classification {
  std::size_t n = 0;
  std::size_t classes = 0;  // connected classes examined
  std::vector<CatalogEntry> catalog;

  std::size_t count() const noexcept { return catalog.size(); }
};

/// Evaluates pred(items[i]) for every i on `jobs` threads; result order
/// matches input order regardless of scheduling.
template <typename T, typename Pred>
std::vector<char> parallel_flags(const std::vector<T>& items, unsigned jobs, Pred pred) {
  std::vector<char> flags(items.size(), 0);
  if (jobs <= 1 || items.size() < 2) {
    for (std::size_t i = 0; i < items.size(); ++i) flags[i] = pred(items[i]) ? 1 : 0;
    return flags;
  }
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    constexpr std::size_t kChunk = 256;
    for (std::size_t lo; (lo = next.fetch_add(kChunk)) < items.size();) {
      const std::size_t hi = std::min(items.size(), lo + kChunk);
      for (std::size_t i = lo; i < hi; ++i) flags[i] = pred(items[i]) ? 1 : 0;
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  return flags;
}

/// Irreducible members of a set of class keys, kept in key order.
inline std::vector<CatalogEntry> irreducible_entries(const std::vector<CanonicalForm>& keys,
                                                     unsigned jobs = 1) {
  auto flags = parallel_flags(keys, jobs,
                              [](const CanonicalForm& k) { return !is_reducible(k.graph()); });
  std::vector<CatalogEntry> out;
  for (std::size_t i = 0; i < keys.size(); ++i) {
    if (flags[i]) out.push_back({keys[i].graph(), keys[i].n, keys[i]});
  }
  return out;
}

/// Connected irreducible classes of order n.
inline Classification classify(std::size_t n, unsigned jobs = 1) {
  auto keys = connected_classes(n);
  return {n, keys.size(), irreducible_entries(keys, jobs)};
}

/// Classifies externally supplied graphs (for example a generator's output):
/// disconnected graphs are dropped, isomorphic duplicates collapse to one
/// class. All graphs must have order n.
inline Classification classify_graphs(const std::vector<Graph>& graphs, std::size_t n,
                                      unsigned jobs = 1) {
  std::unordered_set<CanonicalForm> seen;
  for (const Graph& g : graphs) {
    if (g.order() != n) {
      throw std::invalid_argument("expected order " + std::to_string(n) + ", got a graph of order " +
                                  std::to_string(g.order()));
    }
    if (is_connected(g)) seen.insert(canonical_form(g));
  }
  std::vector<CanonicalForm> keys(seen.begin(), seen.end());
  std::sort(keys.begin(), keys.end());
  return {n, keys.size(), irreducible_entries(keys, jobs)};
}

/// Header comment, then one canonical graph6 line per entry in key order.
inline void write_catalog(std::ostream& out, std::size_t n, std::vector<CatalogEntry> entries) {
  std::sort(entries.begin(), entries.end(),
            [](const CatalogEntry& a, const CatalogEntry& b) { return a.canonical < b.canonical; });
  out << "# connected irreducible graphs, order " << n << ", count " << entries.size() << '\n';
  for (const auto& e : entries) out << e.canonical.graph6() << '\n';
}

inline void export_catalog(const Classification& c, const std::string& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open catalog file " + path + " for writing");
  write_catalog(out, c.n, c.catalog);
  out.flush();
  if (!out) throw std::runtime_error("failed writing catalog file " + path);
}

inline std::vector<Graph> load_graph6_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open graph6 file " + path);
  try {
    return read_graph6_stream(in);
  } catch (const std::exception& e) {
    throw std::runtime_error(path + ": " + e.what());
  }
}

/// Result of re-checking a catalog file.
struct CatalogReport {
  std::size_t graphs = 0;
  std::vector<std::size_t> disconnected;  // indices into the input
  std::vector<std::size_t> reducible;
  std::vector<std::pair<std::size_t, std::size_t>> isomorphic_pairs;

  bool ok() const noexcept {
    return disconnected.empty() && reducible.empty() && isomorphic_pairs.empty();
  }
};

inline CatalogReport verify_catalog(const std::vector<Graph>& graphs, unsigned jobs = 1) {
  CatalogReport report;
  report.graphs = graphs.size();
  auto reducible = parallel_flags(graphs, jobs, [](const Graph& g) { return is_reducible(g); });
  std::vector<std::pair<CanonicalForm, std::size_t>> keyed;
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    if (!is_connected(graphs[i])) report.disconnected.push_back(i);
    if (reducible[i]) report.reducible.push_back(i);
    keyed.emplace_back(canonical_form(graphs[i]), i);
  }
  std::sort(keyed.begin(), keyed.end());
  for (std::size_t i = 1; i < keyed.size(); ++i) {
    if (keyed[i].first == keyed[i - 1].first) {
      report.isomorphic_pairs.emplace_back(keyed[i - 1].second, keyed[i].second);
    }
  }
  return report;
}

}  // namespace dtr
