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

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace qchan::cli {

struct CheckResult {
  std::string suite;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
};

struct VerifyOptions {
  std::uint64_t seed = 0;
  /// 0 selects each suite's default trial count.
  std::size_t trials = 0;
};

/// dpi, bkm, sandwich, integral, region.
const std::vector<std::string>& suite_names();

/// Runs one suite, or every suite for "all". Throws kParse for an unknown name.
std::vector<CheckResult> run_suite(std::string_view suite, const VerifyOptions& options);

}  // namespace qchan::cli
