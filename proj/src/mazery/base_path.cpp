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

#include "clairvoyant/mazery/base_path.hpp"

#include <algorithm>

#include <fmt/format.h>

#include "clairvoyant/mazery/slope.hpp"
#include "clairvoyant/mazery/walls.hpp"

namespace clairvoyant::mazery {

const char* to_string(BasePathClause clause) noexcept {
  switch (clause) {
    case BasePathClause::kBounds:
      return "bounds";
    case BasePathClause::kWallPresent:
      return "wall present";
    case BasePathClause::kSlope:
      return "slope";
    case BasePathClause::kCornerMismatch:
      return "corner symbol mismatch";
  }
  return "?";
}

std::vector<Point> construct_base_path(Point u, Point v, const BinarySequence& x, const BinarySequence& y,
                                       std::uint32_t m) {
  if (m == 0) throw Error(ErrorCode::kInvalidArgument, "m must be positive");
  const std::int64_t mm = m;
  if (u.x < 0 || u.y < 0 || v.x > static_cast<std::int64_t>(x.length()) ||
      v.y > static_cast<std::int64_t>(y.length())) {
    throw BasePathError(BasePathClause::kBounds, "base path: rectangle leaves the sequences");
  }
  if (!slope_condition(u, v, Rational(1, 2 * mm), Rational(mm))) {
    throw BasePathError(BasePathClause::kSlope,
                        fmt::format("base path: slope conditions fail for ({},{})->({},{})", u.x, u.y, v.x, v.y));
  }
  if (longest_run(x, Interval{u.x, v.x, Closure::kRightClosed}) >= mm) {
    throw BasePathError(BasePathClause::kWallPresent,
                        fmt::format("base path: vertical wall present in ]{},{}]", u.x, v.x));
  }
  if (x[static_cast<std::size_t>(v.x)] != y[static_cast<std::size_t>(v.y)]) {
    throw BasePathError(BasePathClause::kCornerMismatch,
                        fmt::format("base path: X({}) != Y({})", v.x, v.y));
  }

  const std::int64_t a = v.x - u.x;
  const std::int64_t b = v.y - u.y;
  std::vector<std::int64_t> s(static_cast<std::size_t>(b), 0);  // s[i] for i = 1..b-1
  if (b >= 2) {
    s[static_cast<std::size_t>(b - 1)] = std::max(mm * (b - 2), a - 2 * mm);
    for (std::int64_t i = b - 2; i >= 1; --i) {
      s[static_cast<std::size_t>(i)] = std::max(mm * (i - 1), s[static_cast<std::size_t>(i + 1)] - 2 * mm);
    }
  }

  std::vector<Point> path;
  path.reserve(static_cast<std::size_t>(b));
  for (std::int64_t i = 1; i < b; ++i) {
    const std::int64_t row = u.y + i;
    const int want = y[static_cast<std::size_t>(row)];
    const std::int64_t lo = s[static_cast<std::size_t>(i)];
    std::int64_t chosen = -1;
    for (std::int64_t off = lo + 1; off <= lo + mm; ++off) {
      if (x[static_cast<std::size_t>(u.x + off)] == want) {
        chosen = off;
        break;
      }
    }
    if (chosen < 0) {
      // Unreachable under the checked preconditions: a window of m symbols
      // with no run of length m contains both symbols.
      throw BasePathError(BasePathClause::kWallPresent, "base path: window without a matching symbol");
    }
    path.push_back(Point{u.x + chosen, row});
  }
  path.push_back(v);
  return path;
}

}  // namespace clairvoyant::mazery
