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

#include <cstddef>
#include <istream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "dtreduce/graph.hpp"

namespace dtr {

/// Malformed graph6 input. offset() is the index of the offending byte.
class Graph6Error : public std::runtime_error {
 public:
  Graph6Error(const std::string& what, std::size_t offset)
      : std::runtime_error("graph6 byte " + std::to_string(offset) + ": " + what),
        offset_(offset) {}
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

inline std::string graph6_encode(const Graph& g) {
  const std::size_t n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else {
    out.push_back(static_cast<char>(126));
    for (int shift = 12; shift >= 0; shift -= 6) {
      out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
    }
  }
  // Upper triangle, column by column: (0,1), (0,2), (1,2), (0,3), ...
  int acc = 0;
  int nbits = 0;
  for (Vertex j = 1; j < n; ++j) {
    const Mask col = g.neighbors(j);
    for (Vertex i = 0; i < j; ++i) {
      acc = (acc << 1) | static_cast<int>(contains(col, i));
      if (++nbits == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        nbits = 0;
      }
    }
  }
  if (nbits > 0) out.push_back(static_cast<char>((acc << (6 - nbits)) + 63));
  return out;
}

inline Graph graph6_decode(std::string_view text) {
  auto sextet = [&](std::size_t at) {
    const auto c = static_cast<unsigned char>(text[at]);
    if (c < 63 || c > 126) {
      throw Graph6Error("character code " + std::to_string(c) +
                            " is outside the printable range 63..126",
                        at);
    }
    return static_cast<int>(c - 63);
  };

  if (text.empty()) throw Graph6Error("empty input", 0);
  std::size_t pos = 0;
  std::size_t n = 0;
  if (static_cast<unsigned char>(text[0]) == 126) {
    if (text.size() < 4) throw Graph6Error("truncated vertex count", text.size());
    if (static_cast<unsigned char>(text[1]) == 126) {
      throw Graph6Error("orders above 258047 are not supported", 1);
    }
    n = (static_cast<std::size_t>(sextet(1)) << 12) |
        (static_cast<std::size_t>(sextet(2)) << 6) | static_cast<std::size_t>(sextet(3));
    pos = 4;
    if (n > kMaxVertices) throw Graph6Error("order " + std::to_string(n) + " exceeds 64", 0);
  } else {
    n = static_cast<std::size_t>(sextet(0));
    pos = 1;
  }

  const std::size_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::size_t body = (bits + 5) / 6;
  if (text.size() < pos + body) {
    throw Graph6Error("truncated adjacency data, expected " + std::to_string(body) + " bytes",
                      text.size());
  }
  if (text.size() > pos + body) throw Graph6Error("trailing data", pos + body);

  Graph g(n);
  std::size_t k = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i, ++k) {
      const int word = sextet(pos + k / 6);
      if ((word >> (5 - k % 6)) & 1) g.add_edge(i, j);
    }
  }
  if (bits % 6 != 0) {
    const std::size_t last = pos + body - 1;
    const int pad_mask = (1 << (6 - bits % 6)) - 1;
    if ((sextet(last) & pad_mask) != 0) throw Graph6Error("nonzero padding bits", last);
  }
  return g;
}

/// Reads one graph per line. Skips blank lines, '#' comment lines and the
/// optional ">>graph6<<" header (also when it prefixes the first graph).
inline std::vector<Graph> read_graph6_stream(std::istream& in) {
  static constexpr std::string_view kHeader = ">>graph6<<";
  std::vector<Graph> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string_view s(line);
    if (!s.empty() && s.back() == '\r') s.remove_suffix(1);
    if (s.substr(0, kHeader.size()) == kHeader) s.remove_prefix(kHeader.size());
    if (s.empty() || s.front() == '#') continue;
    try {
      out.push_back(graph6_decode(s));
    } catch (const Graph6Error& e) {
      throw std::runtime_error("line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  return out;
}

}  // namespace dtr
