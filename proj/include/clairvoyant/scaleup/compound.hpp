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

#include "clairvoyant/core/rational.hpp"
#include "clairvoyant/mazery/cleanness.hpp"
#include "clairvoyant/mazery/interval.hpp"

namespace clairvoyant::scaleup {

using mazery::Interval;
using mazery::Point;
using mazery::Rectangle;
using mazery::WallValue;

/// i(d) = d for d in {0, 1}, otherwise floor(log_lambda d) with
/// lambda = 2^(1/2), computed exactly as floor(log2 d^2).
std::int64_t compound_distance_index(std::int64_t d);

/// Two barriers W1, W2 (in this order, same orientation) at distance
/// d = W2.left - W1.right, merged into one of rank r1 + r2 - i(d).
struct CompoundWall {
  WallValue first;
  WallValue second;
  std::int64_t distance = 0;
  std::int64_t index = 0;  // i(d)
  std::int64_t rank = 0;
  bool is_wall = false;    // both parts are walls and the gap holds no wall

  WallValue as_wall() const;
  friend bool operator==(const CompoundWall&, const CompoundWall&) = default;
};

/// Light means rank < heavy_threshold.
bool is_light(const WallValue& w, const Rational& heavy_threshold);

/// First pass: W1 light, W2 any, 0 <= d <= phi. Second pass: W1 any (input or
/// first-pass result), W2 light, 0 <= d <= phi. Duplicates are dropped; the
/// output is sorted by (left, right, rank).
std::vector<CompoundWall> compound_walls(const std::vector<WallValue>& walls, long double phi,
                                         const Rational& heavy_threshold);

enum class Endpoint { kLeft, kRight };

/// Cleanness of an endpoint of `scanned` at the next level: clean now, and no
/// wall inside `scanned` has its near end (the right end when the endpoint is
/// the right one, the left end otherwise) closer than phi/3 to it.
bool promote_cleanness(const Interval& scanned, Endpoint endpoint, const std::vector<WallValue>& walls,
                       long double phi, bool level_clean);

/// Chebyshev distance from a point to a closed rectangle.
long double distance(Point u, const Rectangle& r);

/// Trap-cleanness of corner u of q at the next level: trap-clean now, and
/// every trap contained in q lies at distance >= gamma from u.
bool promote_trap_cleanness(Point u, const Rectangle& q, const std::vector<Rectangle>& traps, long double gamma,
                            bool level_clean);

struct LevelStructures {
  std::vector<WallValue> walls;
  std::vector<Rectangle> traps;
};

/// Closes a scale-up step: old traps are replaced by `new_traps`; light walls
/// are dropped, together with every wall contained in a dropped light wall
/// that was dominant (with respect to `delta`); heavy walls and `new_walls`
/// of rank >= heavy_threshold are kept.
LevelStructures finish_step(const LevelStructures& current, const std::vector<WallValue>& new_walls,
                            const std::vector<Rectangle>& new_traps, const Rational& heavy_threshold, double delta);

}  // namespace clairvoyant::scaleup
