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

#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "qchan/channels.hpp"

namespace qchan {

/// Parses a textual channel description.
///
///   depol:d=<int>,p=<float>      deph:p=<float>        amp:gamma=<float>
///   dephgen:file=<csv>           erase:nu=<float>,d=<int>
///   flag:p=<float>,a=<spec>,b=<spec>
///   kraus:file=<json>            id:d=<int>
///
/// Nested specs that themselves contain commas must be wrapped in
/// parentheses or brackets, e.g. `flag:p=0.5,a=(depol:d=2,p=0.1),b=id:d=2`.
/// Grammar violations throw kParse; invalid parameters keep their own code.
Channel parse_channel_spec(std::string_view spec);

/// Kind and raw key/value pairs of a spec, without building the channel.
struct SpecFields {
  std::string kind;
  std::map<std::string, std::string> params;

  /// Throws kParse if the key is missing or not a number.
  double number(const std::string& key) const;
};

SpecFields parse_spec_fields(std::string_view spec);

/// Real matrix, one row per line, comma separated.
ComplexMatrix read_matrix_csv(const std::filesystem::path& path);

/// Accepts nested rows of [re, im] pairs (or bare reals), an object
/// {"rows", "cols", "data"} with row-major [re, im] data, or a flat list of
/// d² entries.
ComplexMatrix parse_matrix_json(std::string_view text);
ComplexMatrix read_matrix_json(const std::filesystem::path& path);

/// A JSON list of matrices in any form accepted by parse_matrix_json.
std::vector<ComplexMatrix> read_kraus_json(const std::filesystem::path& path);

/// Real 3-vector from "x,y,z".
Vec3 parse_vec3(std::string_view text);

}  // namespace qchan
