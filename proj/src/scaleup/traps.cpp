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

#include "clairvoyant/scaleup/traps.hpp"

#include <algorithm>
#include <limits>

#include <fmt/format.h>

#include "clairvoyant/core/errors.hpp"
#include "clairvoyant/core/rng.hpp"
#include "clairvoyant/core/stats.hpp"
#include "clairvoyant/mazery/walls.hpp"
#include "clairvoyant/scaleup/compound.hpp"

namespace clairvoyant::scaleup {

namespace {

ProbabilityEstimate make_estimate(std::uint64_t successes, std::uint64_t trials) {
  const auto ci = wilson_interval(successes, trials);
  return ProbabilityEstimate{trials, successes, static_cast<double>(successes) / static_cast<double>(trials), ci.low,
                             ci.high};
}

void require_trials(std::uint64_t trials) {
  if (trials < kMinTrials) {
    throw Error(ErrorCode::kUnderpowered, fmt::format("{} trials requested, at least {} required", trials, kMinTrials));
  }
}

/// Is there a good vertical hole ]a1, a2] through the horizontal wall `w`
/// with ]a1 - delta, a2 + delta] inside the closed window?
bool has_good_hole(const BinarySequence& x, const BinarySequence& y, const WallValue& w, const MissingHoleQuery& q) {
  const Rational bound = Rational(w.body.size()) / q.slb;
  const auto max_size = static_cast<std::int64_t>(floor_of(bound).convert_to<long long>());
  const auto nx = static_cast<std::int64_t>(x.length());
  const std::int64_t lo = std::max<std::int64_t>(0, q.window.left + q.delta);
  const std::int64_t hi = std::min(nx, q.window.right - q.delta);
  for (std::int64_t a1 = lo; a1 < hi; ++a1) {
    if (!mazery::level1_cleanness(mazery::Point{a1, w.body.left}, x, y).lower_left_trap_clean) continue;
    const std::int64_t limit = std::min(hi, a1 + max_size);
    const ReachFrontier f =
        reach_from(x, y, q.step_max, static_cast<std::size_t>(a1), static_cast<std::size_t>(w.body.left),
                   static_cast<std::size_t>(w.body.right), static_cast<std::size_t>(limit));
    if (f.positions.find_next(static_cast<std::size_t>(a1 + 1))) return true;
  }
  return false;
}

}  // namespace

bool detect_missing_hole_event(const BinarySequence& x, const BinarySequence& y, const MissingHoleQuery& q) {
  if (q.delta < 1 || q.b < 0) throw Error(ErrorCode::kInvalidArgument, "missing-hole query needs delta >= 1, b >= 0");
  const std::int64_t start = q.b + q.delta;
  const std::int64_t top = q.b + 3 * q.delta;
  for (const auto& w : mazery::find_walls(y, q.m, mazery::Orientation::kHorizontal)) {
    if (w.body.left != start || w.body.right > top) continue;
    if (!is_light(w, q.heavy_threshold)) continue;
    if (!has_good_hole(x, y, w, q)) return true;
  }
  return false;
}

TrapEstimate estimate_missing_hole_trap(const BinarySequence& x, const BinarySequence& y, const MissingHoleQuery& q,
                                        std::uint64_t trials, std::uint64_t seed, double w) {
  require_trials(trials);
  const std::int64_t first = std::max<std::int64_t>(1, q.b);
  const std::int64_t last = q.b + 3 * q.delta;
  if (last > static_cast<std::int64_t>(y.length())) {
    throw Error(ErrorCode::kInputBounds, fmt::format("Y has length {}, the event needs {}", y.length(), last));
  }
  TrapEstimate out;
  out.event = detect_missing_hole_event(x, y, q);
  std::uint64_t hits = 0;
  BinarySequence sample = y;
  for (std::uint64_t t = 0; t < trials; ++t) {
    TrialRng rng(derive_subseed(seed, t));
    rng.resample(sample, static_cast<std::size_t>(first), static_cast<std::size_t>(last));
    if (detect_missing_hole_event(x, sample, q)) ++hits;
  }
  out.conditional = make_estimate(hits, trials);
  out.w_squared = w * w;
  out.trap_estimated = out.event && out.conditional.ci_high <= out.w_squared;
  return out;
}

long double correlated_window_length(int kind, const Rational& slb, long double delta, long double gamma) {
  const long double inv = 1.0L / to_long_double(slb);
  if (kind == 1) return 29 * inv * delta;
  if (kind == 2) return 9 * inv * gamma;
  throw Error(ErrorCode::kInvalidArgument, "correlated trap kind must be 1 or 2");
}

bool detect_correlated_event(const Interval& window, std::int64_t b, std::int64_t delta,
                             const std::vector<Rectangle>& traps) {
  const std::int64_t top = b + 5 * delta;
  std::vector<std::pair<std::int64_t, std::int64_t>> xs;  // (right, left) of contained traps
  for (const auto& t : traps) {
    if (window.left <= t.lo.x && t.hi.x <= window.right && b <= t.lo.y && t.hi.y <= top) {
      xs.emplace_back(t.hi.x, t.lo.x);
    }
  }
  // Earliest-deadline greedy yields a largest family of disjoint projections.
  std::sort(xs.begin(), xs.end());
  int count = 0;
  std::int64_t last_right = std::numeric_limits<std::int64_t>::min();
  for (const auto& [right, left] : xs) {
    if (left > last_right) {
      ++count;
      last_right = right;
    }
  }
  return count >= 4;
}

WindowEvent missing_hole_window_event(std::int64_t delta, std::uint32_t m, const Rational& heavy_threshold,
                                      const Rational& slb, StepMax step_max) {
  return [=](const BinarySequence& x, const BinarySequence& y, const Interval& window) {
    MissingHoleQuery q{window, 1, delta, m, heavy_threshold, slb, step_max};
    return detect_missing_hole_event(x, y, q);
  };
}

WindowEvent correlated_window_event(
    std::int64_t delta, std::function<std::vector<Rectangle>(const BinarySequence&, const BinarySequence&)> traps) {
  return [delta, traps = std::move(traps)](const BinarySequence& x, const BinarySequence& y, const Interval& window) {
    return detect_correlated_event(window, 1, delta, traps(x, y));
  };
}

EmergingEstimate detect_emerging_barrier(const Interval& body, const BinarySequence& x, int type,
                                         const WindowEvent& event, std::size_t y_length, std::int64_t delta,
                                         std::uint64_t trials, std::uint64_t seed, double w) {
  require_trials(trials);
  if (type < 1 || type > 3) throw Error(ErrorCode::kInvalidArgument, "emerging barrier type must be 1, 2 or 3");
  std::vector<Interval> windows;
  for (std::int64_t u = body.left + 1; u <= body.left + 2 * delta; ++u) {
    for (std::int64_t v = std::max(u, body.right - 2 * delta + 1); v <= body.right; ++v) {
      windows.push_back(Interval{u, v, mazery::Closure::kClosed});
    }
  }
  if (windows.empty()) throw Error(ErrorCode::kInvalidArgument, "body admits no candidate window");
  std::vector<std::uint64_t> hits(windows.size(), 0);
  for (std::uint64_t t = 0; t < trials; ++t) {
    TrialRng rng(derive_subseed(seed, t));
    const BinarySequence y = rng.sequence(y_length);
    for (std::size_t k = 0; k < windows.size(); ++k) {
      if (event(x, y, windows[k])) ++hits[k];
    }
  }
  const auto best = static_cast<std::size_t>(std::max_element(hits.begin(), hits.end()) - hits.begin());
  EmergingEstimate out;
  out.type = type;
  out.best_window = windows[best];
  out.estimate = make_estimate(hits[best], trials);
  out.w_squared = w * w;
  out.barrier_estimated = out.estimate.ci_low > out.w_squared;
  return out;
}

bool is_emerging_prewall(const Interval& body, const std::vector<WallValue>& walls, std::int64_t delta,
                         const Rational& heavy_threshold) {
  using mazery::Closure;
  auto external_flank = [&](std::int64_t lo, std::int64_t hi) {
    return hi - lo >= delta && mazery::is_external(Interval{lo, hi, Closure::kRightClosed}, walls);
  };
  bool shape = mazery::is_external(body, walls);
  for (const auto& w : walls) {
    if (shape) break;
    if (!is_light(w, heavy_threshold) || w.body.left < body.left || w.body.right > body.right) continue;
    if (!mazery::is_dominant(w, walls, static_cast<double>(delta))) continue;
    const bool left_empty = w.body.left == body.left;
    const bool right_empty = w.body.right == body.right;
    if (left_empty && right_empty) continue;
    shape = (left_empty || external_flank(body.left, w.body.left)) &&
            (right_empty || external_flank(w.body.right, body.right));
  }
  if (!shape) return false;
  auto touches_wall = [&](std::int64_t p, bool left_side) {
    return std::any_of(walls.begin(), walls.end(), [&](const WallValue& w) {
      return left_side ? w.body.right == p : w.body.left == p;
    });
  };
  const bool left_ok =
      touches_wall(body.left, true) ||
      mazery::is_external(Interval{std::max<std::int64_t>(-1, body.left - delta), body.left, Closure::kRightClosed},
                          walls);
  const bool right_ok = touches_wall(body.right, false) ||
                        external_flank(body.right, body.right + delta);
  return left_ok && right_ok;
}

std::vector<WallValue> designate_emerging_walls(const std::array<std::vector<Interval>, 3>& prewalls,
                                                std::int64_t rank, mazery::Orientation orientation) {
  std::vector<WallValue> designated;
  for (const int type_index : {0, 2, 1}) {
    auto list = prewalls[static_cast<std::size_t>(type_index)];
    std::sort(list.begin(), list.end(), [](const Interval& a, const Interval& b) {
      return std::make_pair(a.left, a.size()) < std::make_pair(b.left, b.size());
    });
    for (const auto& body : list) {
      const bool free = std::none_of(designated.begin(), designated.end(),
                                     [&](const WallValue& w) { return mazery::intersects(w.body, body); });
      if (free) designated.push_back(WallValue{body, rank, orientation, mazery::WallKind::kEmerging, true});
    }
  }
  return designated;
}

}  // namespace clairvoyant::scaleup
