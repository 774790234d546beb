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


// Command-line entry point.
//
//   dtreduce reduce <graph6|pixelfile> [--mode four|eight]
//   dtreduce enumerate --order N [--catalog out.g6] [--jobs K] [--from-graph6 in.g6]
//   dtreduce verify-catalog file.g6 [--jobs K]
//   dtreduce levels generate --orders A..B [--limit L] [--out levels.json]
//   dtreduce levels check <level-id> <placement> [--levels levels.json]
//   dtreduce levels fixtures [--levels levels.json] [--out fixtures.json]
//   dtreduce levels serve-dir <dir> [--orders A..B] [--limit L]
//
// Exit status: 0 success or true verdict, 1 false verdict, 2 error.

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "dtreduce/dtreduce.hpp"

namespace {

constexpr int kTrue = 0;
constexpr int kFalse = 1;
constexpr int kError = 2;

std::string join(const std::vector<dtr::Vertex>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

std::pair<std::size_t, std::size_t> parse_orders(const std::string& text) {
  const auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      const auto n = std::stoul(text);
      return {n, n};
    }
    return {std::stoul(text.substr(0, dots)), std::stoul(text.substr(dots + 2))};
  } catch (const std::exception&) {
    throw std::invalid_argument("orders must look like 5 or 1..9, got '" + text + "'");
  }
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  out << text;
  if (!out) throw std::runtime_error("failed writing " + path.string());
}

int run_reduce(const std::string& input, const std::string& mode) {
  dtr::Graph g;
  if (std::filesystem::is_regular_file(input)) {
    const auto adjacency = mode == "four" ? dtr::AdjacencyMode::kFour : dtr::AdjacencyMode::kEight;
    g = dtr::from_pixels(dtr::load_pixel_file(input), adjacency);
  } else {
    g = dtr::graph6_decode(input);
  }
  const auto verdict = dtr::find_reduction(g);
  const auto full = dtr::reduce_fully_tracked(g);
  std::cout << "order: " << g.order() << "\nedges: " << g.size() << '\n'
            << "verdict: " << (verdict.reducible() ? "reducible" : "irreducible") << '\n'
            << "witness: " << (verdict.reducible() ? join(*verdict.witness) : "none") << '\n'
            << "reduced: " << dtr::graph6_encode(full.graph) << '\n'
            << "reduced-order: " << full.graph.order() << '\n'
            << "reduced-kept: " << join(full.kept) << '\n';
  return verdict.reducible() ? kTrue : kFalse;
}

int run_enumerate(std::size_t order, const std::string& catalog, unsigned jobs,
                  const std::string& from_graph6) {
  const auto t0 = std::chrono::steady_clock::now();
  const auto result = from_graph6.empty()
                          ? dtr::classify(order, jobs)
                          : dtr::classify_graphs(dtr::load_graph6_file(from_graph6), order, jobs);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::cout << "order: " << order << "\nconnected: " << result.classes
            << "\nirreducible: " << result.count() << '\n';
  std::cerr << "elapsed: " << secs << " s\n";
  if (!catalog.empty()) dtr::export_catalog(result, catalog);
  return kTrue;
}

int run_verify_catalog(const std::string& path, unsigned jobs) {
  const auto graphs = dtr::load_graph6_file(path);
  const auto report = dtr::verify_catalog(graphs, jobs);
  std::cout << "graphs: " << report.graphs << '\n';
  for (auto i : report.disconnected) std::cout << "disconnected: entry " << i << '\n';
  for (auto i : report.reducible) {
    std::cout << "reducible: entry " << i << " " << dtr::graph6_encode(graphs[i]) << '\n';
  }
  for (auto [a, b] : report.isomorphic_pairs) {
    std::cout << "isomorphic: entries " << a << " and " << b << '\n';
  }
  std::cout << "verdict: " << (report.ok() ? "ok" : "failed") << '\n';
  return report.ok() ? kTrue : kFalse;
}

int run_levels_check(const std::string& levels_path, const std::string& id,
                     const std::string& placement, const std::string& store,
                     const std::string& solver) {
  const auto levels = dtr::read_level_file(levels_path);
  const auto& level = dtr::find_level(levels, id);
  const auto p = dtr::parse_placement(placement);
  const auto check = dtr::check_win(level, p);
  nlohmann::ordered_json out;
  out["level"] = id;
  out["spot"] = p.spot;
  out["expect"] = dtr::win_check_to_json(check);
  std::cout << out.dump() << '\n';
  if (check.won() && !store.empty()) {
    dtr::SolutionStore(store).record(level, {id, p, solver, dtr::utc_timestamp_now()});
  }
  return check.won() ? kTrue : kFalse;
}

int run_serve_dir(const std::filesystem::path& dir, const std::string& orders, std::size_t limit) {
  const auto [lo, hi] = parse_orders(orders);
  std::filesystem::create_directories(dir);
  const auto levels = dtr::generate_levels(lo, hi, limit);
  const auto fixtures = dtr::make_fixtures(levels);
  write_text(dir / "levels.json", dtr::dump_level_file(levels));
  write_text(dir / "fixtures.json", dtr::dump_fixtures(fixtures));
  nlohmann::ordered_json manifest;
  manifest["levels"] = "levels.json";
  manifest["fixtures"] = "fixtures.json";
  manifest["level_count"] = levels.size();
  manifest["fixture_count"] = fixtures.size();
  write_text(dir / "manifest.json", manifest.dump(1) + "\n");
  std::cout << "wrote " << levels.size() << " levels and " << fixtures.size() << " fixtures to "
            << dir.string() << '\n';
  return kTrue;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Reducibility solver, enumerator and puzzle levels for graphs"};
  app.require_subcommand(1);

  std::string input, mode = "eight";
  auto* reduce = app.add_subcommand("reduce", "Decide reducibility and fully reduce a graph");
  reduce->add_option("input", input, "graph6 string or pixel file")->required();
  reduce->add_option("--mode", mode, "pixel adjacency")->check(CLI::IsMember({"four", "eight"}));

  std::size_t order = 0;
  std::string catalog, from_graph6;
  unsigned jobs = 1;
  auto* enumerate = app.add_subcommand("enumerate", "Count connected irreducible graphs");
  enumerate->add_option("--order", order, "vertex count")->required()->check(CLI::Range(1, 9));
  enumerate->add_option("--catalog", catalog, "write the catalog as graph6");
  enumerate->add_option("--jobs", jobs, "worker threads (0 = all cores)")->check(CLI::Range(0u, 256u));
  enumerate->add_option("--from-graph6", from_graph6, "classify graphs from this file instead");

  std::string catalog_in;
  auto* verify = app.add_subcommand("verify-catalog", "Re-check a catalog file");
  verify->add_option("file", catalog_in)->required();
  verify->add_option("--jobs", jobs, "worker threads")->check(CLI::Range(1u, 256u));

  auto* levels = app.add_subcommand("levels", "Puzzle levels");
  levels->require_subcommand(1);

  std::string orders = "1..6", out_path = "levels.json";
  std::size_t limit = 0;
  bool include_irreducible = false;
  auto* generate = levels->add_subcommand("generate", "Write a level file");
  generate->add_option("--orders", orders, "order range, e.g. 1..9");
  generate->add_option("--limit", limit, "levels per order (0 = all)");
  generate->add_option("--out", out_path, "output file");
  generate->add_flag("--include-irreducible", include_irreducible, "also ship unsolvable levels");

  std::string levels_path = "levels.json", level_id, placement, store, solver = "cli";
  auto* check = levels->add_subcommand("check", "Judge a placement");
  check->add_option("level-id", level_id)->required();
  check->add_option("placement", placement, "spots, e.g. 1,2,0")->required();
  check->add_option("--levels", levels_path, "level file");
  check->add_option("--record", store, "append winning placements to this solution store");
  check->add_option("--solver", solver, "solver tag for recorded solutions");

  std::string fixtures_out = "fixtures.json";
  std::uint32_t seed = 87;
  auto* fixtures = levels->add_subcommand("fixtures", "Export conformance fixtures");
  fixtures->add_option("--levels", levels_path, "level file");
  fixtures->add_option("--out", fixtures_out, "output file");
  fixtures->add_option("--seed", seed, "sampling seed");

  std::string dir;
  auto* serve = levels->add_subcommand("serve-dir", "Write the static bundle for the game UI");
  serve->add_option("dir", dir)->required();
  serve->add_option("--orders", orders, "order range, e.g. 1..6");
  serve->add_option("--limit", limit, "levels per order (0 = all)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kError;
  }

  try {
    if (*reduce) return run_reduce(input, mode);
    if (*enumerate) {
      if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());
      return run_enumerate(order, catalog, jobs, from_graph6);
    }
    if (*verify) return run_verify_catalog(catalog_in, jobs);
    if (*generate) {
      const auto [lo, hi] = parse_orders(orders);
      const auto out = dtr::generate_levels(lo, hi, limit, include_irreducible);
      dtr::write_level_file(out_path, out);
      std::cout << "wrote " << out.size() << " levels to " << out_path << '\n';
      return kTrue;
    }
    if (*check) return run_levels_check(levels_path, level_id, placement, store, solver);
    if (*fixtures) {
      const auto f = dtr::make_fixtures(dtr::read_level_file(levels_path), seed);
      write_text(fixtures_out, dtr::dump_fixtures(f));
      std::cout << "wrote " << f.size() << " fixtures to " << fixtures_out << '\n';
      return kTrue;
    }
    if (*serve) return run_serve_dir(dir, orders, limit);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kError;
  }
  return kError;
}
