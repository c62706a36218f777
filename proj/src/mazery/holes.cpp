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

#include "clairvoyant/mazery/holes.hpp"

#include <algorithm>

#include <fmt/format.h>

#include "clairvoyant/core/errors.hpp"
#include "clairvoyant/mazery/cleanness.hpp"

namespace clairvoyant::mazery {

namespace {

std::int64_t max_hole_size(const WallValue& wall, const Rational& slb) {
  if (slb <= 0) throw Error(ErrorCode::kInvalidArgument, "slb must be positive");
  const Rational bound = Rational(wall.body.size()) / slb;
  return static_cast<std::int64_t>(floor_of(bound).convert_to<long long>());
}

/// Positions i in [1, limit] with X(i) == symbol.
Bitset symbol_mask(const BinarySequence& x, int symbol, std::int64_t limit) {
  Bitset mask(static_cast<std::size_t>(limit + 1));
  for (std::int64_t i = 1; i <= limit; ++i) {
    if (x[static_cast<std::size_t>(i)] == symbol) mask.set(static_cast<std::size_t>(i));
  }
  return mask;
}

}  // namespace

std::string Hole::to_json() const {
  return fmt::format(R"({{"hole":{{"left":{},"right":{}}},"wall":{},"entry":[{},{}],"exit":[{},{}]}})", interval.left,
                     interval.right, wall.to_json(), entry.x, entry.y, exit.x, exit.y);
}

std::optional<Hole> find_fitting_hole(const WallValue& wall, const Interval& starts, const BinarySequence& x,
                                      const BinarySequence& y, const Rational& slb, StepMax step_max) {
  const std::int64_t max_size = max_hole_size(wall, slb);
  const auto nx = static_cast<std::int64_t>(x.length());
  const auto ny = static_cast<std::int64_t>(y.length());
  const std::int64_t p = wall.body.left;
  const std::int64_t q = wall.body.right;
  const std::int64_t first = std::max<std::int64_t>(0, starts.first_point());
  for (std::int64_t a = first; a <= starts.last_point(); ++a) {
    if (wall.orientation == Orientation::kVertical) {
      // Hole in Y: walk rows a+1, a+2, ... with x confined to [p, q].
      if (q > nx || a >= ny) break;
      const std::int64_t top = std::min(ny, a + max_size);
      const auto zero_mask = symbol_mask(x, 0, q);
      const auto one_mask = symbol_mask(x, 1, q);
      ReachFrontier frontier{static_cast<std::size_t>(a), Bitset(static_cast<std::size_t>(q + 1))};
      frontier.positions.set(static_cast<std::size_t>(p));
      for (std::int64_t row = a + 1; row <= top; ++row) {
        const auto& mask = y[static_cast<std::size_t>(row)] ? one_mask : zero_mask;
        frontier = frontier_step(frontier, mask, step_max);
        if (frontier.empty()) break;
        if (frontier.positions.test(static_cast<std::size_t>(q))) {
          return Hole{Interval{a, row, Closure::kRightClosed}, wall, Point{p, a}, Point{q, row}};
        }
      }
    } else {
      // Hole in X: walk rows p+1..q with x confined to [a, a + max_size].
      if (q > ny || a >= nx) break;
      const std::int64_t limit = std::min(nx, a + max_size);
      const ReachFrontier frontier =
          reach_from(x, y, step_max, static_cast<std::size_t>(a), static_cast<std::size_t>(p),
                     static_cast<std::size_t>(q), static_cast<std::size_t>(limit));
      if (const auto hit = frontier.positions.find_next(static_cast<std::size_t>(a + 1))) {
        const auto right = static_cast<std::int64_t>(*hit);
        return Hole{Interval{a, right, Closure::kRightClosed}, wall, Point{a, p}, Point{right, q}};
      }
    }
  }
  return std::nullopt;
}

bool is_good_hole(const Hole& hole, const BinarySequence& x, const BinarySequence& y) {
  return level1_cleanness(hole.entry, x, y).lower_left_trap_clean;
}

}  // namespace clairvoyant::mazery
