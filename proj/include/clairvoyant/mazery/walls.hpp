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

#include "clairvoyant/core/sequence.hpp"
#include "clairvoyant/mazery/interval.hpp"

namespace clairvoyant::mazery {

/// Every ]i, i+l] with m <= l < 2m on which `seq` is constant, rank 2m,
/// sorted by (left, size). All qualifying sub-intervals are listed, not only
/// maximal runs.
std::vector<WallValue> find_walls(const BinarySequence& seq, std::uint32_t m,
                                  Orientation orientation = Orientation::kVertical);

/// True iff `interval` meets no wall body.
bool is_external(const Interval& interval, const std::vector<WallValue>& walls);

/// The smallest integer external-interval length that counts as "size >= delta".
std::int64_t external_margin(double delta) noexcept;

/// True iff `wall` is flanked on the left by an external interval of size
/// >= delta (or one reaching back to the start) and on the right by an
/// external interval of size >= delta.
bool is_dominant(const WallValue& wall, const std::vector<WallValue>& walls, double delta);

/// Walls flanked on the left by an external interval of size >= delta (or one
/// reaching back to the start) and on the right by an external interval of
/// size >= delta. Throws kStructure if a dominant wall fails to contain every
/// wall meeting it, which would indicate a broken wall list.
std::vector<WallValue> find_dominant_walls(const std::vector<WallValue>& walls, double delta);

/// Maximal external right-closed intervals inside ]-1, length].
std::vector<Interval> maximal_external_intervals(const std::vector<WallValue>& walls, std::int64_t length);

/// Intervals lying between two consecutive maximal external intervals that
/// are large (size >= delta, or starting at -1). These are the candidates
/// accepted by spanning_sequence.
std::vector<Interval> spanned_regions(const std::vector<WallValue>& walls, std::int64_t length, double delta);

/// Walls J_1, ..., J_k of size m spanning `interval`: J_1 starts at its left
/// end, J_k ends at its right end, and each next wall is the closest one
/// after the previous (leftmost on ties). A region shorter than 2m is returned
/// as a single wall. Throws kStructure naming the side whose precondition
/// fails.
std::vector<WallValue> spanning_sequence(const Interval& interval, const std::vector<WallValue>& walls,
                                         const BinarySequence& seq, std::uint32_t m, double delta,
                                         Orientation orientation = Orientation::kVertical);

/// Length of the longest constant run of seq inside the points of `interval`.
std::int64_t longest_run(const BinarySequence& seq, const Interval& interval);

}  // namespace clairvoyant::mazery
