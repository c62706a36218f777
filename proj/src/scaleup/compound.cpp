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

#include "clairvoyant/scaleup/compound.hpp"

#include <algorithm>
#include <bit>
#include <tuple>

#include <boost/multiprecision/cpp_int.hpp>

#include "clairvoyant/core/errors.hpp"
#include "clairvoyant/mazery/walls.hpp"

namespace clairvoyant::scaleup {

std::int64_t compound_distance_index(std::int64_t d) {
  if (d < 0) throw Error(ErrorCode::kInvalidArgument, "compound distance must be nonnegative");
  if (d <= 1) return d;
  const boost::multiprecision::cpp_int square = boost::multiprecision::cpp_int(d) * d;
  return static_cast<std::int64_t>(boost::multiprecision::msb(square));
}

WallValue CompoundWall::as_wall() const {
  return WallValue{Interval{first.body.left, second.body.right, mazery::Closure::kRightClosed}, rank,
                   first.orientation, mazery::WallKind::kCompound, is_wall};
}

bool is_light(const WallValue& w, const Rational& heavy_threshold) { return Rational(w.rank) < heavy_threshold; }

namespace {

bool gap_has_wall(const WallValue& a, const WallValue& b, const std::vector<WallValue>& walls) {
  const std::int64_t lo = a.body.right;
  const std::int64_t hi = b.body.left;
  return std::any_of(walls.begin(), walls.end(), [&](const WallValue& w) {
    return w.orientation == a.orientation && w.body.size() > 0 && lo <= w.body.left && w.body.right <= hi;
  });
}

auto key(const CompoundWall& c) {
  return std::make_tuple(c.first.body.left, c.second.body.right, c.rank, c.first.body.right, c.second.body.left,
                         c.first.rank, c.second.rank);
}

}  // namespace

std::vector<CompoundWall> compound_walls(const std::vector<WallValue>& walls, long double phi,
                                         const Rational& heavy_threshold) {
  std::vector<CompoundWall> out;
  auto combine = [&](const WallValue& w1, const WallValue& w2, bool w1_is_wall) {
    if (w1.orientation != w2.orientation) return;
    const std::int64_t d = w2.body.left - w1.body.right;
    if (d < 0 || static_cast<long double>(d) > phi) return;
    CompoundWall c;
    c.first = w1;
    c.second = w2;
    c.distance = d;
    c.index = compound_distance_index(d);
    c.rank = w1.rank + w2.rank - c.index;
    c.is_wall = w1_is_wall && w2.is_wall && !gap_has_wall(w1, w2, walls);
    out.push_back(c);
  };
  for (const auto& w1 : walls) {
    if (!is_light(w1, heavy_threshold)) continue;
    for (const auto& w2 : walls) combine(w1, w2, w1.is_wall);
  }
  const std::size_t first_pass = out.size();
  for (const auto& w2 : walls) {
    if (!is_light(w2, heavy_threshold)) continue;
    for (const auto& w1 : walls) combine(w1, w2, w1.is_wall);
    for (std::size_t k = 0; k < first_pass; ++k) {
      const CompoundWall prior = out[k];
      combine(prior.as_wall(), w2, prior.is_wall);
    }
  }
  std::sort(out.begin(), out.end(), [](const CompoundWall& a, const CompoundWall& b) { return key(a) < key(b); });
  out.erase(std::unique(out.begin(), out.end(), [](const CompoundWall& a, const CompoundWall& b) { return key(a) == key(b); }),
            out.end());
  return out;
}

bool promote_cleanness(const Interval& scanned, Endpoint endpoint, const std::vector<WallValue>& walls,
                       long double phi, bool level_clean) {
  if (!level_clean) return false;
  const long double margin = phi / 3;
  for (const auto& w : walls) {
    if (w.body.left < scanned.left || w.body.right > scanned.right) continue;
    const std::int64_t gap =
        endpoint == Endpoint::kRight ? scanned.right - w.body.right : w.body.left - scanned.left;
    if (static_cast<long double>(gap) < margin) return false;
  }
  return true;
}

long double distance(Point u, const Rectangle& r) {
  auto axis = [](std::int64_t p, std::int64_t lo, std::int64_t hi) -> std::int64_t {
    if (p < lo) return lo - p;
    if (p > hi) return p - hi;
    return 0;
  };
  return static_cast<long double>(std::max(axis(u.x, r.lo.x, r.hi.x), axis(u.y, r.lo.y, r.hi.y)));
}

bool promote_trap_cleanness(Point u, const Rectangle& q, const std::vector<Rectangle>& traps, long double gamma,
                            bool level_clean) {
  if (!level_clean) return false;
  for (const auto& t : traps) {
    const bool inside = q.lo.x <= t.lo.x && t.hi.x <= q.hi.x && q.lo.y <= t.lo.y && t.hi.y <= q.hi.y;
    if (inside && distance(u, t) < gamma) return false;
  }
  return true;
}

LevelStructures finish_step(const LevelStructures& current, const std::vector<WallValue>& new_walls,
                            const std::vector<Rectangle>& new_traps, const Rational& heavy_threshold, double delta) {
  std::vector<Interval> dropped_dominant;
  for (const auto& w : current.walls) {
    if (is_light(w, heavy_threshold) && mazery::is_dominant(w, current.walls, delta)) {
      dropped_dominant.push_back(w.body);
    }
  }
  auto inside_dropped = [&](const WallValue& w) {
    return std::any_of(dropped_dominant.begin(), dropped_dominant.end(), [&](const Interval& body) {
      return body.left <= w.body.left && w.body.right <= body.right;
    });
  };
  LevelStructures next;
  for (const auto& w : current.walls) {
    if (!is_light(w, heavy_threshold) && !inside_dropped(w)) next.walls.push_back(w);
  }
  for (const auto& w : new_walls) {
    if (!is_light(w, heavy_threshold)) next.walls.push_back(w);
  }
  next.traps = new_traps;
  return next;
}

}  // namespace clairvoyant::scaleup
