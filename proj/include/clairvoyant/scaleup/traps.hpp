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

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "clairvoyant/core/embedding.hpp"
#include "clairvoyant/core/rational.hpp"
#include "clairvoyant/core/sequence.hpp"
#include "clairvoyant/mazery/cleanness.hpp"
#include "clairvoyant/mazery/interval.hpp"

namespace clairvoyant::scaleup {

using mazery::Interval;
using mazery::Rectangle;
using mazery::WallValue;

/// Monte Carlo estimate with a 95% Wilson interval.
struct ProbabilityEstimate {
  std::uint64_t trials = 0;
  std::uint64_t successes = 0;
  double p_hat = 0;
  double ci_low = 0;
  double ci_high = 0;
};

/// Minimum number of resampling rounds accepted by the estimators.
inline constexpr std::uint64_t kMinTrials = 100;

/// Structural input of the missing-hole event at the first level. `window`
/// is the closed x-interval I; the horizontal potential wall must start at
/// b + delta and end inside [b, b + 3 delta]. Horizontal walls are the
/// constant runs of Y of length in [m, 2m); they are light when their rank 2m
/// is below heavy_threshold.
struct MissingHoleQuery {
  Interval window;
  std::int64_t b = 1;
  std::int64_t delta = 1;
  std::uint32_t m = 1;
  Rational heavy_threshold;
  Rational slb;
  StepMax step_max{1};
};

/// Exact structural event: some light horizontal wall starting at b + delta
/// has no good vertical hole ]a1, a2] with ]a1 - delta, a2 + delta] inside
/// the window passing through it.
bool detect_missing_hole_event(const BinarySequence& x, const BinarySequence& y, const MissingHoleQuery& q);

struct TrapEstimate {
  bool event = false;                // the event on the given Y
  ProbabilityEstimate conditional;   // over Y(J) resampled, X fixed
  double w_squared = 0;
  bool trap_estimated = false;       // event && ci_high <= w^2
};

/// Resamples Y on [b, b + 3 delta] `trials` times, the t-th round drawn from
/// derive_subseed(seed, t). Throws kUnderpowered when trials < kMinTrials.
TrapEstimate estimate_missing_hole_trap(const BinarySequence& x, const BinarySequence& y, const MissingHoleQuery& q,
                                        std::uint64_t trials, std::uint64_t seed, double w);

/// L1 = 29 delta / slb for kind 1, L2 = 9 gamma / slb for kind 2.
long double correlated_window_length(int kind, const Rational& slb, long double delta, long double gamma);

/// True iff the closed rectangle window x [b, b + 5 delta] contains at least
/// four traps whose x-projections are pairwise disjoint.
bool detect_correlated_event(const Interval& window, std::int64_t b, std::int64_t delta,
                             const std::vector<Rectangle>& traps);

/// Event evaluated on a candidate window I' = [u', v'] with Y random.
using WindowEvent = std::function<bool(const BinarySequence& x, const BinarySequence& y, const Interval& window)>;

/// The missing-hole event with b = 1 on each window.
WindowEvent missing_hole_window_event(std::int64_t delta, std::uint32_t m, const Rational& heavy_threshold,
                                      const Rational& slb, StepMax step_max);

/// The correlated event with b = 1, given a trap finder for (X, Y).
WindowEvent correlated_window_event(
    std::int64_t delta, std::function<std::vector<Rectangle>(const BinarySequence&, const BinarySequence&)> traps);

struct EmergingEstimate {
  int type = 1;
  Interval best_window;
  ProbabilityEstimate estimate;
  double w_squared = 0;
  bool barrier_estimated = false;  // ci_low > w^2 on the best window
};

/// Scans every I' = [u', v'] with u' in ]u, u + 2 delta], v' in
/// ]v - 2 delta, v] and u' <= v', estimating the probability of `event` over
/// a fresh Y of length y_length. Trial t uses derive_subseed(seed, t) for
/// every window, so windows are compared on common samples. The window with
/// the largest estimate (earliest on ties) is reported.
EmergingEstimate detect_emerging_barrier(const Interval& body, const BinarySequence& x, int type,
                                         const WindowEvent& event, std::size_t y_length, std::int64_t delta,
                                         std::uint64_t trials, std::uint64_t seed, double w);

/// Pre-wall conditions of an emerging barrier body against the current walls:
/// the body is external, or is a dominant light wall plus one or two external
/// flanks of size >= delta; and each end touches either an external interval
/// of size >= delta or a wall.
bool is_emerging_prewall(const Interval& body, const std::vector<WallValue>& walls, std::int64_t delta,
                         const Rational& heavy_threshold);

/// Designates walls from pre-walls listed per type (index 0 for type 1, and
/// so on). Types are processed in the order 1, 3, 2; each list is sorted by
/// (left, size) and a pre-wall is kept iff it is disjoint from every wall
/// designated before it.
std::vector<WallValue> designate_emerging_walls(const std::array<std::vector<Interval>, 3>& prewalls,
                                                std::int64_t rank, mazery::Orientation orientation);

}  // namespace clairvoyant::scaleup
