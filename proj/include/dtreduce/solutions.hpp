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

#include <chrono>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "dtreduce/levels.hpp"

namespace dtr {

struct SolutionRecord {
  std::string level;
  Placement placement;
  std::string solver;
  std::string timestamp;  // ISO-8601 UTC

  friend bool operator==(const SolutionRecord&, const SolutionRecord&) = default;
};

inline std::string utc_timestamp_now() {
  const std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  std::ostringstream os;
  os << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return os.str();
}

/// A placement that failed check_win on record.
class SolutionRejected : public std::runtime_error {
 public:
  SolutionRejected(const std::string& level, WinCheck check)
      : std::runtime_error("placement does not win level " + level + ": " +
                           win_check_to_json(check).dump()),
        check_(std::move(check)) {}
  const WinCheck& check() const noexcept { return check_; }

 private:
  WinCheck check_;
};

/// Append-only solution log, one JSON object per line:
///   {"level":..., "spot":[...], "solver":..., "ts":...}
/// One writer at a time. Readers ignore an unterminated final line, so they
/// always see a complete prefix.
class SolutionStore {
 public:
  explicit SolutionStore(std::string path) : path_(std::move(path)) {}

  const std::string& path() const noexcept { return path_; }

  void record(const Level& level, const SolutionRecord& rec) const {
    if (rec.level != level.id) {
      throw std::invalid_argument("record is for level '" + rec.level + "', not '" + level.id + "'");
    }
    WinCheck check = check_win(level, rec.placement);
    if (!check.won()) throw SolutionRejected(level.id, std::move(check));

    nlohmann::ordered_json j;
    j["level"] = rec.level;
    j["spot"] = rec.placement.spot;
    j["solver"] = rec.solver;
    j["ts"] = rec.timestamp;
    std::ofstream out(path_, std::ios::binary | std::ios::app);
    if (!out) throw std::runtime_error("cannot open solution store " + path_);
    out << j.dump() << '\n';
    out.flush();
    if (!out) throw std::runtime_error("failed appending to solution store " + path_);
  }

  /// Records for `level_id` in insertion order. A missing file is empty.
  std::vector<SolutionRecord> load(const std::string& level_id) const {
    std::vector<SolutionRecord> out;
    for (auto& rec : load_all()) {
      if (rec.level == level_id) out.push_back(std::move(rec));
    }
    return out;
  }

  std::vector<SolutionRecord> load_all() const {
    std::ifstream in(path_, std::ios::binary);
    if (!in) return {};
    std::ostringstream ss;
    ss << in.rdbuf();
    const std::string text = ss.str();
    std::vector<SolutionRecord> out;
    std::size_t start = 0;
    std::size_t lineno = 0;
    for (std::size_t nl; (nl = text.find('\n', start)) != std::string::npos; start = nl + 1) {
      ++lineno;
      const std::string line = text.substr(start, nl - start);
      if (line.empty()) continue;
      try {
        const auto j = nlohmann::json::parse(line);
        SolutionRecord rec;
        rec.level = j.at("level").get<std::string>();
        rec.placement.spot = j.at("spot").get<std::vector<Vertex>>();
        rec.solver = j.at("solver").get<std::string>();
        rec.timestamp = j.at("ts").get<std::string>();
        out.push_back(std::move(rec));
      } catch (const nlohmann::json::exception& e) {
        throw std::runtime_error(path_ + ":" + std::to_string(lineno) + ": " + e.what());
      }
    }
    return out;
  }

 private:
  std::string path_;
};

}  // namespace dtr
