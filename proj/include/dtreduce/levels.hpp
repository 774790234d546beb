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
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <numbers>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "dtreduce/canonical.hpp"
#include "dtreduce/enumerator.hpp"
#include "dtreduce/graph.hpp"
#include "dtreduce/pixels.hpp"
#include "dtreduce/reducer.hpp"

namespace dtr {

struct Position {
  double x = 0.0;
  double y = 0.0;
  friend bool operator==(const Position&, const Position&) = default;
};

/// A playable puzzle: a graph drawn at fixed spots.
struct Level {
  std::string id;
  Graph graph;
  std::vector<Position> positions;
  /// False only for exhibition levels that have no winning placement.
  bool solvable = true;

  /// Difficulty: vertex count, then edge count.
  std::pair<std::size_t, std::size_t> rank() const { return {graph.order(), graph.size()}; }
};

/// Where each vertex currently sits: vertex i occupies the spot of vertex
/// spot[i]. A placement is a candidate reduction map.
struct Placement {
  std::vector<Vertex> spot;

  static Placement identity(std::size_t n) {
    Placement p;
    for (Vertex v = 0; v < n; ++v) p.spot.push_back(v);
    return p;
  }
  friend bool operator==(const Placement&, const Placement&) = default;
};

/// Win verdict plus the cues a player sees.
struct WinCheck {
  bool vacancy = false;                // some spot is empty
  std::vector<Vertex> strayed;         // vertices not on or next to their start
  std::vector<Edge> red_edges;         // original edges now stretched apart

  bool won() const noexcept { return vacancy && strayed.empty() && red_edges.empty(); }
};

/// Judges a placement from the level's edge list alone, the same data the
/// level file carries.
inline WinCheck check_win(const Level& level, const Placement& p) {
  const std::size_t n = level.graph.order();
  if (p.spot.size() != n) {
    throw std::invalid_argument("placement has " + std::to_string(p.spot.size()) +
                                " spots for a level with " + std::to_string(n) + " vertices");
  }
  for (Vertex s : p.spot) {
    if (s >= n) throw std::invalid_argument("placement uses unknown spot " + std::to_string(s));
  }
  const auto edge_list = level.graph.edges();
  const std::set<Edge> edge_set(edge_list.begin(), edge_list.end());
  auto near = [&](Vertex a, Vertex b) {
    return a == b || edge_set.count({std::min(a, b), std::max(a, b)}) > 0;
  };

  WinCheck out;
  std::vector<bool> occupied(n, false);
  for (Vertex s : p.spot) occupied[s] = true;
  out.vacancy = std::find(occupied.begin(), occupied.end(), false) != occupied.end();
  for (Vertex v = 0; v < n; ++v) {
    if (!near(v, p.spot[v])) out.strayed.push_back(v);
  }
  for (auto [u, v] : edge_list) {
    if (!near(p.spot[u], p.spot[v])) out.red_edges.emplace_back(u, v);
  }
  return out;
}

inline constexpr double kMinSeparation = 0.15;
inline constexpr std::uint32_t kLayoutSeed = 20141221;

namespace detail {

inline double round_to_grid(double v) { return std::round(v * 1000.0) / 1000.0; }

inline void push_apart(std::vector<Position>& pos) {
  const std::size_t n = pos.size();
  for (int round = 0; round < 200; ++round) {
    bool moved = false;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        double dx = pos[j].x - pos[i].x;
        double dy = pos[j].y - pos[i].y;
        double d = std::hypot(dx, dy);
        if (d >= kMinSeparation * 1.01) continue;
        if (d < 1e-9) {
          const double a = 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(n);
          dx = std::cos(a);
          dy = std::sin(a);
          d = 1.0;
        }
        const double shift = (kMinSeparation * 1.05 - std::min(d, kMinSeparation)) / 2.0;
        pos[i].x -= dx / d * shift;
        pos[i].y -= dy / d * shift;
        pos[j].x += dx / d * shift;
        pos[j].y += dy / d * shift;
        moved = true;
      }
    }
    if (!moved) break;
  }
}

}  // namespace detail

/// Deterministic force-directed drawing inside roughly [-1, 1]^2.
///
/// Starts from a circle with seeded jitter, runs a fixed number of
/// spring-electrical iterations with linear cooling, recenters, rescales,
/// separates spots closer than kMinSeparation and snaps to a 0.001 grid.
inline std::vector<Position> layout(const Graph& g) {
  const std::size_t n = g.order();
  if (n == 0) return {};
  if (n == 1) return {Position{}};

  std::mt19937 rng(kLayoutSeed + static_cast<std::uint32_t>(n));
  auto jitter = [&] { return (static_cast<double>(rng()) / 4294967296.0 - 0.5) * 0.1; };
  std::vector<Position> pos(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double a = 2.0 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(n);
    pos[i] = {std::cos(a) + jitter(), std::sin(a) + jitter()};
  }

  const double k = std::sqrt(4.0 / static_cast<double>(n));
  constexpr int kIterations = 300;
  std::vector<Position> disp(n);
  for (int it = 0; it < kIterations; ++it) {
    const double temperature = 0.2 * (1.0 - static_cast<double>(it) / kIterations) + 1e-3;
    std::fill(disp.begin(), disp.end(), Position{});
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        const double dx = pos[i].x - pos[j].x;
        const double dy = pos[i].y - pos[j].y;
        const double d = std::max(std::hypot(dx, dy), 1e-6);
        double force = k * k / d;
        if (g.adjacent(static_cast<Vertex>(i), static_cast<Vertex>(j))) force -= d * d / k;
        disp[i].x += dx / d * force;
        disp[i].y += dy / d * force;
        disp[j].x -= dx / d * force;
        disp[j].y -= dy / d * force;
      }
    }
    for (std::size_t i = 0; i < n; ++i) {
      const double len = std::hypot(disp[i].x, disp[i].y);
      if (len < 1e-12) continue;
      const double step = std::min(len, temperature);
      pos[i].x += disp[i].x / len * step;
      pos[i].y += disp[i].y / len * step;
    }
  }

  Position c{};
  for (const auto& p : pos) {
    c.x += p.x / static_cast<double>(n);
    c.y += p.y / static_cast<double>(n);
  }
  double extent = 0.0;
  for (auto& p : pos) {
    p.x -= c.x;
    p.y -= c.y;
    extent = std::max(extent, std::hypot(p.x, p.y));
  }
  if (extent > 1e-9) {
    for (auto& p : pos) {
      p.x /= extent;
      p.y /= extent;
    }
  }
  detail::push_apart(pos);
  for (auto& p : pos) p = {detail::round_to_grid(p.x), detail::round_to_grid(p.y)};
  return pos;
}

/// Lattice coordinates of a pixel image, in from_pixels vertex order.
inline std::vector<Position> layout_from_pixels(const PixelImage& image) {
  std::vector<Position> out;
  for (const Point& p : image.points()) {
    out.push_back({static_cast<double>(p.x), static_cast<double>(p.y)});
  }
  return out;
}

inline std::string level_id(const CanonicalForm& key) {
  std::ostringstream os;
  os << 'n' << static_cast<int>(key.n) << '-' << std::hex << key.bits;
  return os.str();
}

/// Levels for every connected class with order in [min_order, max_order].
/// Classes are ranked by (order, edges, canonical key); at most `limit`
/// levels are kept per order (0 keeps all). Irreducible classes are skipped
/// unless `include_irreducible`, in which case they ship with solvable=false.
inline std::vector<Level> generate_levels(std::size_t min_order, std::size_t max_order,
                                          std::size_t limit = 0,
                                          bool include_irreducible = false) {
  if (min_order < 1 || max_order > kMaxEnumerationOrder || min_order > max_order) {
    throw std::out_of_range("level orders must satisfy 1 <= min <= max <= 9");
  }
  std::vector<Level> out;
  for (std::size_t n = min_order; n <= max_order; ++n) {
    std::vector<std::tuple<std::size_t, CanonicalForm, Graph, bool>> ranked;
    for (const CanonicalForm& key : connected_classes(n)) {
      Graph g = key.graph();
      const bool solvable = is_reducible(g);
      if (!solvable && !include_irreducible) continue;
      ranked.emplace_back(g.size(), key, std::move(g), solvable);
    }
    std::sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) {
      return std::tie(std::get<0>(a), std::get<1>(a)) < std::tie(std::get<0>(b), std::get<1>(b));
    });
    std::size_t taken = 0;
    for (auto& [edges, key, g, solvable] : ranked) {
      if (limit != 0 && taken == limit) break;
      Level level{level_id(key), g, layout(g), solvable};
      out.push_back(std::move(level));
      ++taken;
    }
  }
  return out;
}

// Level file: {"levels":[{"id","n","edges":[[u,v],...],"positions":[[x,y],...]}]}

inline nlohmann::ordered_json level_to_json(const Level& level) {
  nlohmann::ordered_json j;
  j["id"] = level.id;
  j["n"] = level.graph.order();
  auto edges = nlohmann::ordered_json::array();
  for (auto [u, v] : level.graph.edges()) edges.push_back({u, v});
  j["edges"] = std::move(edges);
  auto pos = nlohmann::ordered_json::array();
  for (const auto& p : level.positions) pos.push_back({p.x, p.y});
  j["positions"] = std::move(pos);
  if (!level.solvable) j["solvable"] = false;
  return j;
}

/// One level object per line.
inline std::string dump_level_file(const std::vector<Level>& levels) {
  std::string out = "{\"levels\":[";
  for (std::size_t i = 0; i < levels.size(); ++i) {
    out += (i == 0 ? "\n" : ",\n") + level_to_json(levels[i]).dump();
  }
  return out + "\n]}\n";
}

class LevelFileError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline Level level_from_json(const nlohmann::json& j) {
  auto field = [&](const char* name) -> const nlohmann::json& {
    if (!j.is_object() || !j.contains(name)) {
      throw LevelFileError(std::string("level is missing field '") + name + "'");
    }
    return j.at(name);
  };
  Level level;
  try {
    level.id = field("id").get<std::string>();
    const auto n = field("n").get<std::size_t>();
    level.graph = Graph(n);
    Edge prev{0, 0};
    bool first = true;
    for (const auto& e : field("edges")) {
      const Edge edge{e.at(0).get<Vertex>(), e.at(1).get<Vertex>()};
      if (e.size() != 2 || edge.first >= edge.second || edge.second >= n) {
        throw LevelFileError("edge " + e.dump() + " must be [u,v] with u < v < n");
      }
      if (!first && !(prev < edge)) {
        throw LevelFileError("edges must be sorted and unique, found " + e.dump());
      }
      level.graph.add_edge(edge.first, edge.second);
      prev = edge;
      first = false;
    }
    for (const auto& p : field("positions")) {
      if (p.size() != 2) throw LevelFileError("position " + p.dump() + " must be [x,y]");
      level.positions.push_back({p.at(0).get<double>(), p.at(1).get<double>()});
    }
    if (level.positions.size() != n) {
      throw LevelFileError("'positions' has " + std::to_string(level.positions.size()) +
                           " entries, expected " + std::to_string(n));
    }
    if (j.contains("solvable")) level.solvable = j.at("solvable").get<bool>();
  } catch (const nlohmann::json::exception& e) {
    throw LevelFileError(std::string("malformed level: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw LevelFileError(std::string("malformed level: ") + e.what());
  }
  for (std::size_t a = 0; a < level.positions.size(); ++a) {
    for (std::size_t b = a + 1; b < level.positions.size(); ++b) {
      if (level.positions[a] == level.positions[b]) {
        throw LevelFileError("level " + level.id + ": vertices " + std::to_string(a) + " and " +
                             std::to_string(b) + " share a position");
      }
    }
  }
  return level;
}

inline std::vector<Level> parse_level_file(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw LevelFileError(std::string("level file is not JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("levels") || !doc["levels"].is_array()) {
    throw LevelFileError("level file needs a top-level 'levels' array");
  }
  std::vector<Level> out;
  std::set<std::string> ids;
  for (const auto& j : doc["levels"]) {
    out.push_back(level_from_json(j));
    if (!ids.insert(out.back().id).second) {
      throw LevelFileError("duplicate level id '" + out.back().id + "'");
    }
  }
  return out;
}

inline void write_level_file(const std::string& path, const std::vector<Level>& levels) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open level file " + path + " for writing");
  out << dump_level_file(levels);
  if (!out) throw std::runtime_error("failed writing level file " + path);
}

inline std::vector<Level> read_level_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open level file " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  try {
    return parse_level_file(ss.str());
  } catch (const LevelFileError& e) {
    throw LevelFileError(path + ": " + e.what());
  }
}

inline const Level& find_level(const std::vector<Level>& levels, const std::string& id) {
  auto it = std::find_if(levels.begin(), levels.end(), [&](const Level& l) { return l.id == id; });
  if (it == levels.end()) throw std::out_of_range("no level with id '" + id + "'");
  return *it;
}

/// Parses "2,0,1" or "2 0 1" into a placement.
inline Placement parse_placement(const std::string& text) {
  std::string s = text;
  std::replace(s.begin(), s.end(), ',', ' ');
  std::istringstream in(s);
  Placement p;
  long long v = 0;
  while (in >> v) {
    if (v < 0) throw std::invalid_argument("negative spot in placement '" + text + "'");
    p.spot.push_back(static_cast<Vertex>(v));
  }
  if (!in.eof()) throw std::invalid_argument("cannot parse placement '" + text + "'");
  return p;
}

inline nlohmann::ordered_json win_check_to_json(const WinCheck& w) {
  nlohmann::ordered_json j;
  j["won"] = w.won();
  j["vacancy"] = w.vacancy;
  j["strayed"] = w.strayed;
  auto red = nlohmann::ordered_json::array();
  for (auto [u, v] : w.red_edges) red.push_back({u, v});
  j["red_edges"] = std::move(red);
  return j;
}

}  // namespace dtr
