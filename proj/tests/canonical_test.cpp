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


#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "dtreduce/canonical.hpp"
#include "dtreduce/isomorphism.hpp"
#include "support.hpp"

namespace dtr {
namespace {

TEST(CanonicalFormTest, Examples) {
  std::mt19937 rng(31);
  const Graph c5 = cycle_graph(5);
  EXPECT_EQ(canonical_form(c5), canonical_form(c5.permuted(testing::random_permutation(rng, 5))));
  EXPECT_NE(canonical_form(c5), canonical_form(path_graph(5)));
}

TEST(CanonicalFormTest, TrianglePlusPendantHasOneKey) {
  const Graph paw(4, {{0, 1}, {1, 2}, {2, 0}, {2, 3}});
  std::vector<Vertex> perm{0, 1, 2, 3};
  std::set<CanonicalForm> keys;
  std::size_t relabelings = 0;
  do {
    keys.insert(canonical_form(paw.permuted(perm)));
    ++relabelings;
  } while (std::next_permutation(perm.begin(), perm.end()));
  EXPECT_EQ(relabelings, 24u);
  EXPECT_EQ(keys.size(), 1u);
}

TEST(CanonicalFormTest, InvariantUnderEveryRelabeling) {
  std::mt19937 rng(32);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 1 + rng() % 6;
    Graph g = testing::random_graph(rng, n, static_cast<double>(rng() % 100) / 100.0);
    const CanonicalForm key = canonical_form(g);
    std::vector<Vertex> perm(n);
    std::iota(perm.begin(), perm.end(), Vertex{0});
    do {
      ASSERT_EQ(canonical_form(g.permuted(perm)), key) << graph6_encode(g);
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
}

TEST(CanonicalFormTest, InvariantUnderRandomRelabeling) {
  std::mt19937 rng(33);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 1 + rng() % 9;
    Graph g = testing::random_graph(rng, n, static_cast<double>(rng() % 100) / 100.0);
    const CanonicalForm key = canonical_form(g);
    for (int s = 0; s < 100; ++s) {
      ASSERT_EQ(canonical_form(g.permuted(testing::random_permutation(rng, n))), key)
          << graph6_encode(g);
    }
  }
}

TEST(CanonicalFormTest, HighlySymmetricGraphs) {
  std::mt19937 rng(34);
  const std::vector<Graph> symmetric = {
      complete_graph(9), Graph(9), cycle_graph(9), complete_graph(11),
      // Petersen graph.
      Graph(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 5}, {1, 6}, {2, 7}, {3, 8},
                 {4, 9}, {5, 7}, {7, 9}, {9, 6}, {6, 8}, {8, 5}}),
      // 3x3 rook's graph.
      [] {
        Graph g(9);
        for (Vertex a = 0; a < 9; ++a) {
          for (Vertex b = a + 1; b < 9; ++b) {
            if (a / 3 == b / 3 || a % 3 == b % 3) g.add_edge(a, b);
          }
        }
        return g;
      }()};
  for (const Graph& g : symmetric) {
    const auto key = canonical_form(g);
    for (int s = 0; s < 20; ++s) {
      EXPECT_EQ(canonical_form(g.permuted(testing::random_permutation(rng, g.order()))), key);
    }
    EXPECT_TRUE(are_isomorphic(key.graph(), g));
  }
}

TEST(CanonicalFormTest, EqualKeysExactlyForIsomorphicGraphs) {
  std::mt19937 rng(35);
  for (int trial = 0; trial < 2000; ++trial) {
    const std::size_t n = 1 + rng() % 7;
    Graph g = testing::random_graph(rng, n, 0.5);
    Graph h = testing::random_graph(rng, n, 0.5);
    EXPECT_EQ(canonical_form(g) == canonical_form(h), are_isomorphic(g, h));
  }
}

TEST(CanonicalFormTest, KeyDecodesToAnIsomorphicGraphAndOrdersLikeGraph6) {
  std::mt19937 rng(36);
  std::vector<CanonicalForm> keys;
  for (int trial = 0; trial < 200; ++trial) {
    Graph g = testing::random_graph(rng, 6, 0.5);
    const auto key = canonical_form(g);
    EXPECT_TRUE(are_isomorphic(key.graph(), g));
    EXPECT_EQ(canonical_form(key.graph()), key);
    EXPECT_EQ(key.graph6(), graph6_encode(key.graph()));
    keys.push_back(key);
  }
  for (std::size_t i = 1; i < keys.size(); ++i) {
    EXPECT_EQ(keys[i - 1] < keys[i], keys[i - 1].graph6() < keys[i].graph6());
  }
}

TEST(CanonicalFormTest, CanonicalOrderRelabelsToCanonicalGraph) {
  std::mt19937 rng(37);
  for (int trial = 0; trial < 100; ++trial) {
    Graph g = testing::random_graph(rng, 1 + rng() % 9, 0.4);
    const auto order = canonical_order(g);
    std::vector<Vertex> perm(g.order());
    for (Vertex i = 0; i < order.size(); ++i) perm[order[i]] = i;
    EXPECT_EQ(g.permuted(perm), canonical_graph(g));
  }
}

TEST(CanonicalFormTest, RejectsLargeGraphs) {
  EXPECT_THROW(canonical_form(Graph(12)), std::invalid_argument);
  EXPECT_EQ(canonical_form(Graph()), CanonicalForm{});
}

}  // namespace
}  // namespace dtr
