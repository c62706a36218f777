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
#include <string>

#include "clairvoyant/core/sequence.hpp"
#include "clairvoyant/mazery/interval.hpp"

namespace clairvoyant::mazery {

/// Level-1 cleanness of a grid point. One-dimensional cleanness always holds
/// at level 1, and so does upper-right trap-cleanness since there are no traps.
struct CleannessReport {
  Point point;
  bool lower_left_trap_clean = false;
  bool upper_right_trap_clean = true;
  bool x_left_clean = true;
  bool x_right_clean = true;
  bool y_left_clean = true;
  bool y_right_clean = true;

  std::string to_json() const;
};

/// Lower-left trap-cleanness is X(i) == Y(j). Points off the sequences (a
/// zero coordinate or past the end) only count as clean at the origin.
CleannessReport level1_cleanness(Point point, const BinarySequence& x, const BinarySequence& y);

enum class RectOpenness { kClosed, kLeftOpen, kBottomOpen };

/// Rectangle with corners lo <= hi. Left-open means ]lo.x, hi.x] x [lo.y, hi.y];
/// bottom-open means [lo.x, hi.x] x ]lo.y, hi.y].
struct Rectangle {
  Point lo;
  Point hi;
  RectOpenness openness = RectOpenness::kClosed;

  bool empty() const noexcept;
  Interval x_projection() const noexcept;
  Interval y_projection() const noexcept;
  friend bool operator==(const Rectangle&, const Rectangle&) = default;
};

/// Level-1 hop test: no X-run of length >= m inside the x-projection, no Y-run
/// of length >= m inside the y-projection, and the upper-right corner is
/// lower-left trap-clean. The lower-left corner is upper-right trap-clean
/// automatically. An empty rectangle is a hop.
bool hop_check(const Rectangle& rect, const BinarySequence& x, const BinarySequence& y, std::uint32_t m);

/// One-dimensional level-1 hop: no wall of size >= m inside the points of `interval`.
bool is_interval_hop(const Interval& interval, const BinarySequence& seq, std::uint32_t m);

}  // namespace clairvoyant::mazery
