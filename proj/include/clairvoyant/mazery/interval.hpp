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

#include <compare>
#include <cstdint>
#include <string>

namespace clairvoyant::mazery {

enum class Closure { kRightClosed, kClosed };
enum class Orientation { kVertical, kHorizontal };
enum class WallKind { kBaseRun, kEmerging, kCompound };

const char* to_string(Orientation o) noexcept;
const char* to_string(WallKind k) noexcept;

/// Integer interval. ]a, b] holds the points a+1..b and has size b - a;
/// [a, b] holds a..b. Size is right - left for both closures, which is the
/// convention used for walls and holes.
struct Interval {
  std::int64_t left = 0;
  std::int64_t right = 0;
  Closure closure = Closure::kRightClosed;

  /// Throws kInvalidArgument unless -1 <= left <= right.
  static Interval right_closed(std::int64_t left, std::int64_t right);
  static Interval closed(std::int64_t left, std::int64_t right);

  std::int64_t size() const noexcept { return right - left; }
  std::int64_t first_point() const noexcept { return closure == Closure::kClosed ? left : left + 1; }
  std::int64_t last_point() const noexcept { return right; }
  bool contains_point(std::int64_t p) const noexcept { return first_point() <= p && p <= right; }

  friend auto operator<=>(const Interval&, const Interval&) = default;
};

/// Point-set intersection and containment.
bool intersects(const Interval& a, const Interval& b) noexcept;
bool contains(const Interval& outer, const Interval& inner) noexcept;

struct Point {
  std::int64_t x = 0;
  std::int64_t y = 0;

  friend auto operator<=>(const Point&, const Point&) = default;
};

/// A wall or barrier: body, rank and the process it lives in (vertical walls
/// are intervals of X, horizontal ones intervals of Y). `is_wall` separates
/// designated walls from mere barriers.
struct WallValue {
  Interval body;
  std::int64_t rank = 0;
  Orientation orientation = Orientation::kVertical;
  WallKind kind = WallKind::kBaseRun;
  bool is_wall = true;

  std::string to_json() const;
  friend bool operator==(const WallValue&, const WallValue&) = default;
};

}  // namespace clairvoyant::mazery
