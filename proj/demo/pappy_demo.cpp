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


// Draws Pappy as ASCII art before and after full reduction under both
// pixel adjacencies.

#include <iostream>
#include <set>
#include <string>
#include <utility>

#include "dtreduce/dtreduce.hpp"

namespace {

void draw(const dtr::PixelImage& image, const std::vector<dtr::Vertex>& keep) {
  std::set<std::pair<int, int>> on;
  for (auto v : keep) on.emplace(image.points()[v].x, image.points()[v].y);
  for (int y = 8; y >= 0; --y) {
    std::string row;
    for (int x = 0; x <= 9; ++x) row += on.count({x, y}) ? '#' : '.';
    std::cout << "  " << row << '\n';
  }
}

}  // namespace

int main(int argc, char** argv) {
  const std::string path = argc > 1 ? argv[1] : DTREDUCE_ASSET_DIR "/pappy.txt";
  const auto image = dtr::load_pixel_file(path);

  std::vector<dtr::Vertex> all(image.size());
  for (dtr::Vertex v = 0; v < all.size(); ++v) all[v] = v;
  std::cout << "Pappy, " << image.size() << " points\n";
  draw(image, all);

  for (auto [mode, name] : {std::pair{dtr::AdjacencyMode::kFour, "4-adjacency"},
                            std::pair{dtr::AdjacencyMode::kEight, "8-adjacency"}}) {
    const auto g = dtr::from_pixels(image, mode);
    const auto full = dtr::reduce_fully_tracked(g);
    std::cout << '\n' << name << ": " << g.order() << " vertices, " << g.size() << " edges -> "
              << full.graph.order() << " vertices, " << full.graph.size() << " edges after "
              << full.steps << " reductions\n";
    draw(image, full.kept);
  }
}
