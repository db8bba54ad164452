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

#include "qchan/error.hpp"

namespace qchan {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kNonHermitian: return "NonHermitian";
    case ErrorCode::kDimMismatch: return "DimMismatch";
    case ErrorCode::kBadParam: return "BadParam";
    case ErrorCode::kNotQubit: return "NotQubit";
    case ErrorCode::kNotPSD: return "NotPSD";
    case ErrorCode::kBadBloch: return "BadBloch";
    case ErrorCode::kDomain: return "Domain";
    case ErrorCode::kSupportViolation: return "SupportViolation";
    case ErrorCode::kAssumptionFailed: return "AssumptionFailed";
    case ErrorCode::kPurityPreserving: return "PurityPreserving";
    case ErrorCode::kNotStrictlyPositive: return "NotStrictlyPositive";
    case ErrorCode::kBadEnsemble: return "BadEnsemble";
    case ErrorCode::kParse: return "Parse";
    case ErrorCode::kIo: return "Io";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

}  // namespace qchan
