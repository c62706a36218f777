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

#pragma once

#include <cstdint>
#include <vector>

#include "clairvoyant/core/errors.hpp"
#include "clairvoyant/core/sequence.hpp"
#include "clairvoyant/mazery/interval.hpp"

namespace clairvoyant::mazery {

enum class BasePathClause { kBounds, kWallPresent, kSlope, kCornerMismatch };

const char* to_string(BasePathClause clause) noexcept;

/// Raised (with code kStructure) when a precondition of the base path
/// construction fails; `clause()` names which one.
class BasePathError : public Error {
 public:
  BasePathError(BasePathClause clause, const std::string& what)
      : Error(ErrorCode::kStructure, what), clause_(clause) {}

  BasePathClause clause() const noexcept { return clause_; }

 private:
  BasePathClause clause_;
};

/// Explicit path from u to v in the graph with step bound 3m, for a rectangle
/// with no vertical wall, a matching upper-right corner and the level-1 slope
/// conditions (sigma_x = 1/2m, sigma_y = m). Returns the points on rows
/// u.y+1 .. v.y (u itself excluded); the last point is v.
///
/// Relative to u, with target (a, b): anchors s_1 < ... < s_{b-1} start at
/// their minimal values m(i-1), then s_{b-1} is raised to at least a - 2m and
/// the raise is pushed backwards keeping s_{i+1} - s_i <= 2m. Row i then uses
/// the first x in ]s_i, s_i + m] whose symbol matches Y.
std::vector<Point> construct_base_path(Point u, Point v, const BinarySequence& x, const BinarySequence& y,
                                       std::uint32_t m);

}  // namespace clairvoyant::mazery
