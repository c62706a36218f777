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

#include "clairvoyant/mazery/walls.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <fmt/format.h>

#include "clairvoyant/core/errors.hpp"

namespace clairvoyant::mazery {

namespace {

/// run_from[i] = length of the constant run of seq starting at i (1-based).
std::vector<std::int64_t> runs_from(const BinarySequence& seq) {
  const auto n = static_cast<std::int64_t>(seq.length());
  std::vector<std::int64_t> run(static_cast<std::size_t>(n + 2), 0);
  for (std::int64_t i = n; i >= 1; --i) {
    const auto k = static_cast<std::size_t>(i);
    run[k] = (i < n && seq[k] == seq[k + 1]) ? run[k + 1] + 1 : 1;
  }
  return run;
}

}  // namespace

std::vector<WallValue> find_walls(const BinarySequence& seq, std::uint32_t m, Orientation orientation) {
  if (m == 0) throw Error(ErrorCode::kInvalidArgument, "m must be positive");
  const auto n = static_cast<std::int64_t>(seq.length());
  const auto run = runs_from(seq);
  const std::int64_t mm = m;
  std::vector<WallValue> walls;
  for (std::int64_t i = 0; i + mm <= n; ++i) {
    const std::int64_t longest = std::min(run[static_cast<std::size_t>(i + 1)], 2 * mm - 1);
    for (std::int64_t l = mm; l <= longest; ++l) {
      walls.push_back(WallValue{Interval{i, i + l, Closure::kRightClosed}, 2 * mm, orientation, WallKind::kBaseRun});
    }
  }
  return walls;
}

bool is_external(const Interval& interval, const std::vector<WallValue>& walls) {
  return std::none_of(walls.begin(), walls.end(), [&](const WallValue& w) { return intersects(interval, w.body); });
}

std::int64_t external_margin(double delta) noexcept {
  if (!(delta < static_cast<double>(std::numeric_limits<std::int64_t>::max() / 4))) {
    return std::numeric_limits<std::int64_t>::max() / 4;
  }
  return std::max<std::int64_t>(1, static_cast<std::int64_t>(std::ceil(delta)));
}

bool is_dominant(const WallValue& wall, const std::vector<WallValue>& walls, double delta) {
  const std::int64_t margin = external_margin(delta);
  const Interval before{std::max<std::int64_t>(-1, wall.body.left - margin), wall.body.left, Closure::kRightClosed};
  const Interval after{wall.body.right, wall.body.right + margin, Closure::kRightClosed};
  return is_external(before, walls) && is_external(after, walls);
}

std::vector<WallValue> find_dominant_walls(const std::vector<WallValue>& walls, double delta) {
  std::vector<WallValue> dominant;
  for (const auto& w : walls) {
    if (!is_dominant(w, walls, delta)) continue;
    for (const auto& other : walls) {
      if (intersects(other.body, w.body) && !contains(w.body, other.body)) {
        throw Error(ErrorCode::kStructure,
                    fmt::format("dominant wall ]{},{}] does not contain intersecting wall ]{},{}]", w.body.left,
                                w.body.right, other.body.left, other.body.right));
      }
    }
    dominant.push_back(w);
  }
  return dominant;
}

std::vector<Interval> maximal_external_intervals(const std::vector<WallValue>& walls, std::int64_t length) {
  // Merge the covered point ranges [left+1, right].
  std::vector<std::pair<std::int64_t, std::int64_t>> covered;
  for (const auto& w : walls) {
    if (w.body.size() > 0) covered.emplace_back(w.body.first_point(), w.body.last_point());
  }
  std::sort(covered.begin(), covered.end());
  std::vector<Interval> out;
  std::int64_t prev_end = -1;
  for (const auto& [first, last] : covered) {
    if (first > prev_end + 1) out.push_back(Interval{prev_end, first - 1, Closure::kRightClosed});
    prev_end = std::max(prev_end, last);
  }
  if (prev_end < length) out.push_back(Interval{prev_end, length, Closure::kRightClosed});
  return out;
}

std::vector<Interval> spanned_regions(const std::vector<WallValue>& walls, std::int64_t length, double delta) {
  const std::int64_t margin = external_margin(delta);
  std::vector<Interval> large;
  for (const auto& e : maximal_external_intervals(walls, length)) {
    if (e.left == -1 || e.size() >= margin) large.push_back(e);
  }
  std::vector<Interval> regions;
  for (std::size_t k = 0; k + 1 < large.size(); ++k) {
    regions.push_back(Interval{large[k].right, large[k + 1].left, Closure::kRightClosed});
  }
  return regions;
}

std::vector<WallValue> spanning_sequence(const Interval& interval, const std::vector<WallValue>& walls,
                                         const BinarySequence& seq, std::uint32_t m, double delta,
                                         Orientation orientation) {
  const std::int64_t margin = external_margin(delta);
  const std::int64_t mm = m;
  const auto n = static_cast<std::int64_t>(seq.length());
  const Interval before{std::max<std::int64_t>(-1, interval.left - margin), interval.left, Closure::kRightClosed};
  const Interval after{interval.right, interval.right + margin, Closure::kRightClosed};
  auto covered = [&](std::int64_t p) {
    return std::any_of(walls.begin(), walls.end(), [&](const WallValue& w) { return w.body.contains_point(p); });
  };
  if (interval.size() <= 0 || interval.right > n) {
    throw Error(ErrorCode::kStructure, "spanning precondition failed: interval empty or past the sequence end");
  }
  if (!is_external(before, walls) || !covered(interval.left + 1)) {
    throw Error(ErrorCode::kStructure,
                fmt::format("spanning precondition failed on the left side of ]{},{}]", interval.left, interval.right));
  }
  if (!is_external(after, walls) || !covered(interval.right)) {
    throw Error(ErrorCode::kStructure, fmt::format("spanning precondition failed on the right side of ]{},{}]",
                                                   interval.left, interval.right));
  }

  auto wall_at = [&](std::int64_t left, std::int64_t right) {
    return WallValue{Interval{left, right, Closure::kRightClosed}, 2 * mm, orientation, WallKind::kBaseRun};
  };
  const auto run = runs_from(seq);
  auto constant = [&](std::int64_t left, std::int64_t size) {
    return left >= 0 && left + size <= n && run[static_cast<std::size_t>(left + 1)] >= size;
  };

  if (interval.size() < 2 * mm) {
    if (interval.size() < mm || !constant(interval.left, interval.size())) {
      throw Error(ErrorCode::kStructure, "spanning precondition failed: short region is not a wall");
    }
    return {wall_at(interval.left, interval.right)};
  }
  if (!constant(interval.left, mm)) {
    throw Error(ErrorCode::kStructure, "spanning precondition failed on the left side: no size-m wall at the start");
  }
  if (!constant(interval.right - mm, mm)) {
    throw Error(ErrorCode::kStructure, "spanning precondition failed on the right side: no size-m wall at the end");
  }
  std::vector<WallValue> seq_walls{wall_at(interval.left, interval.left + mm)};
  std::int64_t end = interval.left + mm;
  for (std::int64_t t = end; t + mm <= interval.right - mm; ++t) {
    if (constant(t, mm)) {
      seq_walls.push_back(wall_at(t, t + mm));
      end = t + mm;
      t = end - 1;
    }
  }
  seq_walls.push_back(wall_at(interval.right - mm, interval.right));
  return seq_walls;
}

std::int64_t longest_run(const BinarySequence& seq, const Interval& interval) {
  const auto n = static_cast<std::int64_t>(seq.length());
  const std::int64_t first = std::max<std::int64_t>(1, interval.first_point());
  const std::int64_t last = std::min(n, interval.last_point());
  std::int64_t best = 0;
  std::int64_t cur = 0;
  for (std::int64_t i = first; i <= last; ++i) {
    cur = (i > first && seq[static_cast<std::size_t>(i)] == seq[static_cast<std::size_t>(i - 1)]) ? cur + 1 : 1;
    best = std::max(best, cur);
  }
  return best;
}

}  // namespace clairvoyant::mazery
