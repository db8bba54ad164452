// Copyright 2026 The qchan Authors
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

#include "qchan/manifest.hpp"

#include <chrono>
#include <cstdio>
#include <ctime>
#include <fstream>

#include "json.hpp"
#include "qchan/error.hpp"

namespace qchan::cli {

std::uint64_t fnv1a(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string RunManifest::hash() const {
  nlohmann::json j{{"subcommand", subcommand},
                   {"seed", seed},
                   {"config", config},
                   {"version", version}};
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a(j.dump())));
  return buf;
}

std::string RunManifest::to_json() const {
  nlohmann::json t = nlohmann::json::array();
  for (const auto& [name, secs] : timings) t.push_back({{"task", name}, {"seconds", secs}});
  nlohmann::json j{{"hash", hash()},
                   {"command_line", command_line},
                   {"subcommand", subcommand},
                   {"seed", seed},
                   {"config", config},
                   {"version", version},
                   {"started_utc", started_utc},
                   {"wall_seconds", wall_seconds},
                   {"timings", t}};
  return j.dump(2);
}

std::string utc_now() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::filesystem::path write_sidecar(const RunManifest& manifest, const std::filesystem::path& output) {
  std::filesystem::path path = output;
  path += ".manifest.json";
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(ErrorCode::kIo, "cannot write " + path.string());
  out << manifest.to_json() << '\n';
  return path;
}

}  // namespace qchan::cli
