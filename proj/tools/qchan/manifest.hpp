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

#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace qchan::cli {

/// Provenance of one CLI invocation. The hash covers only the inputs that
/// determine the output (subcommand, seed, config, version), so reruns that
/// differ in timing or worker count share a hash.
struct RunManifest {
  std::string command_line;
  std::string subcommand;
  std::uint64_t seed = 0;
  std::map<std::string, std::string> config;
  std::string version;
  std::string started_utc;
  double wall_seconds = 0.0;
  std::vector<std::pair<std::string, double>> timings;

  std::string hash() const;
  std::string to_json() const;
};

/// FNV-1a, 64 bit.
std::uint64_t fnv1a(const std::string& bytes);

std::string utc_now();

/// Writes `<output>.manifest.json` next to an output file.
std::filesystem::path write_sidecar(const RunManifest& manifest, const std::filesystem::path& output);

}  // namespace qchan::cli
