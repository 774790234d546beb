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
#include <cstdlib>
#include <fstream>
#include <istream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "dtreduce/graph.hpp"

namespace dtr {

struct Point {
  int x = 0;
  int y = 0;
  friend bool operator==(const Point&, const Point&) = default;
};

/// Row-major, top to bottom: y descending, then x ascending.
inline bool raster_before(const Point& a, const Point& b) {
  if (a.y != b.y) return a.y > b.y;
  return a.x < b.x;
}

/// A finite set of lattice points, kept in raster order.
class PixelImage {
 public:
  PixelImage() = default;

  explicit PixelImage(std::vector<Point> points) : points_(std::move(points)) {
    std::sort(points_.begin(), points_.end(), raster_before);
    auto dup = std::adjacent_find(points_.begin(), points_.end());
    if (dup != points_.end()) {
      throw std::invalid_argument("duplicate pixel (" + std::to_string(dup->x) +
                                  "," + std::to_string(dup->y) + ")");
    }
  }

  const std::vector<Point>& points() const noexcept { return points_; }
  std::size_t size() const noexcept { return points_.size(); }

 private:
  std::vector<Point> points_;
};

enum class AdjacencyMode { kFour, kEight };

inline bool pixels_adjacent(const Point& a, const Point& b, AdjacencyMode mode) {
  const int dx = std::abs(a.x - b.x);
  const int dy = std::abs(a.y - b.y);
  if (mode == AdjacencyMode::kFour) return dx + dy == 1;
  return std::max(dx, dy) == 1;
}

/// Vertex i is image.points()[i] (raster order).
inline Graph from_pixels(const PixelImage& image, AdjacencyMode mode) {
  const auto& pts = image.points();
  Graph g(pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      if (pixels_adjacent(pts[i], pts[j], mode)) {
        g.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(j));
      }
    }
  }
  return g;
}

class PixelParseError : public std::runtime_error {
 public:
  PixelParseError(const std::string& what, std::size_t line)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// One "x y" pair per line. '#' starts a comment; blank lines are ignored.
inline PixelImage read_pixel_image(std::istream& in) {
  std::vector<Point> pts;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    Point p;
    if (!(ls >> p.x)) {
      if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
      throw PixelParseError("expected integer x coordinate", lineno);
    }
    if (!(ls >> p.y)) throw PixelParseError("expected integer y coordinate", lineno);
    std::string rest;
    if (ls >> rest) throw PixelParseError("trailing text '" + rest + "'", lineno);
    pts.push_back(p);
  }
  try {
    return PixelImage(std::move(pts));
  } catch (const std::invalid_argument& e) {
    throw PixelParseError(e.what(), lineno);
  }
}

inline PixelImage load_pixel_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open pixel file " + path);
  try {
    return read_pixel_image(in);
  } catch (const PixelParseError& e) {
    throw std::runtime_error(path + ": " + e.what());
  }
}

}  // namespace dtr
