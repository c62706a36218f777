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

#include "clairvoyant/mazery/cleanness.hpp"

#include <fmt/format.h>

#include "clairvoyant/mazery/walls.hpp"

namespace clairvoyant::mazery {

std::string CleannessReport::to_json() const {
  return fmt::format(
      R"({{"point":[{},{}],"lower_left_trap_clean":{},"upper_right_trap_clean":{},"one_dim_clean":{}}})", point.x,
      point.y, lower_left_trap_clean, upper_right_trap_clean,
      x_left_clean && x_right_clean && y_left_clean && y_right_clean);
}

CleannessReport level1_cleanness(Point point, const BinarySequence& x, const BinarySequence& y) {
  CleannessReport report;
  report.point = point;
  const bool on_x = point.x >= 1 && point.x <= static_cast<std::int64_t>(x.length());
  const bool on_y = point.y >= 1 && point.y <= static_cast<std::int64_t>(y.length());
  if (on_x && on_y) {
    report.lower_left_trap_clean = x[static_cast<std::size_t>(point.x)] == y[static_cast<std::size_t>(point.y)];
  } else {
    report.lower_left_trap_clean = point.x == 0 && point.y == 0;
  }
  return report;
}

bool Rectangle::empty() const noexcept {
  switch (openness) {
    case RectOpenness::kClosed:
      return lo.x > hi.x || lo.y > hi.y;
    case RectOpenness::kLeftOpen:
      return lo.x >= hi.x || lo.y > hi.y;
    case RectOpenness::kBottomOpen:
      return lo.x > hi.x || lo.y >= hi.y;
  }
  return true;
}

// Walls are right-closed, so a wall lies inside a closed projection [a, b]
// exactly when it lies inside ]a, b]; both projections reduce to the latter.
Interval Rectangle::x_projection() const noexcept { return Interval{lo.x, hi.x, Closure::kRightClosed}; }

Interval Rectangle::y_projection() const noexcept { return Interval{lo.y, hi.y, Closure::kRightClosed}; }

bool is_interval_hop(const Interval& interval, const BinarySequence& seq, std::uint32_t m) {
  return longest_run(seq, interval) < static_cast<std::int64_t>(m);
}

bool hop_check(const Rectangle& rect, const BinarySequence& x, const BinarySequence& y, std::uint32_t m) {
  if (rect.empty()) return true;
  if (!is_interval_hop(rect.x_projection(), x, m)) return false;
  if (!is_interval_hop(rect.y_projection(), y, m)) return false;
  return level1_cleanness(rect.hi, x, y).lower_left_trap_clean;
}

}  // namespace clairvoyant::mazery
