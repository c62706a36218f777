// Copyright 2026 The Clairvoyant Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "clairvoyant/core/errors.hpp"

namespace clairvoyant {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "invalid-argument";
    case ErrorCode::kParse: return "parse";
    case ErrorCode::kInputBounds: return "input-bounds";
    case ErrorCode::kCompositionDomain: return "composition-domain";
    case ErrorCode::kOracleSize: return "oracle-size";
    case ErrorCode::kStructure: return "structure";
    case ErrorCode::kUnderpowered: return "estimator-underpowered";
    case ErrorCode::kConstraint: return "constraint";
    case ErrorCode::kIo: return "io";
  }
  return "unknown";
}

}  // namespace clairvoyant
