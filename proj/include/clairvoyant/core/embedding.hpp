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

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "clairvoyant/core/bitset.hpp"
#include "clairvoyant/core/sequence.hpp"

namespace clairvoyant {

/// Maximum x-increment per row of the grid graph. The embedding question uses
/// the gap bound m directly; the base mazery graph uses 3m. Callers always pass
/// it explicitly.
struct StepMax {
  std::uint32_t value;

  explicit StepMax(std::uint32_t v);
};

/// Reachable x-coordinates on one row of the grid graph.
struct ReachFrontier {
  std::size_t row = 0;
  Bitset positions;

  /// The row-0 frontier {origin} over x in [0, x_limit].
  static ReachFrontier origin(std::size_t x_limit);

  std::vector<std::size_t> list() const { return positions.positions(); }
  bool empty() const noexcept { return positions.none(); }
  std::string to_json() const;
};

/// Increasing positions n_1 < ... < n_L with n_0 = 0 implied.
struct EmbeddingPath {
  std::vector<std::size_t> steps;
  std::uint32_t gap_bound = 1;

  std::size_t length() const noexcept { return steps.size(); }
  std::string to_json() const;
  friend bool operator==(const EmbeddingPath&, const EmbeddingPath&) = default;
};

/// One row of the reachability DP:
///   { i in match_mask : exists i' in prev, 1 <= i - i' <= step_max }.
/// Runs in O(n / 64 + |prev|) by covering each predecessor's window once.
ReachFrontier frontier_step(const ReachFrontier& prev, const Bitset& match_mask, StepMax step_max);

struct PrefixResult {
  bool embeddable = false;
  ReachFrontier frontier;
};

/// Decides whether Y(1..L) embeds into X with gaps in [1, m]. Positions past
/// |X| are treated as unreachable. Throws kInputBounds when L > |Y|.
PrefixResult embeddable_prefix(const BinarySequence& x, const BinarySequence& y, std::uint32_t m, std::size_t length);

/// Frontiers of every row 0..length (row j at index j). Rows after the first
/// empty one are still emitted, empty.
std::vector<ReachFrontier> all_frontiers(const BinarySequence& x, const BinarySequence& y, StepMax step_max,
                                         std::size_t length);

/// Witness for embeddable_prefix, traced backwards from the smallest final
/// position and always taking the smallest admissible predecessor.
std::optional<EmbeddingPath> extract_embedding(const BinarySequence& x, const BinarySequence& y, std::uint32_t m,
                                               std::size_t length);

/// True iff every gap lies in [1, gap_bound] and Y(i) == X(n_i) for all i.
bool check_embedding(const BinarySequence& x, const BinarySequence& y, const EmbeddingPath& path);

/// Given p1 embedding Y into Z and p2 embedding Z into X, returns the embedding
/// of Y into X with r_i = p2[p1[i]] and gap bound p1.gap_bound * p2.gap_bound.
/// Throws kCompositionDomain if some p1 step exceeds |p2|.
EmbeddingPath compose_embeddings(const EmbeddingPath& p1, const EmbeddingPath& p2);

/// Reachability inside the grid graph between two arbitrary points: from
/// (from_x, from_row) to (to_x, to_row). Only x <= to_x is explored.
bool reachable(const BinarySequence& x, const BinarySequence& y, StepMax step_max, std::size_t from_x,
               std::size_t from_row, std::size_t to_x, std::size_t to_row);

/// Frontier at `to_row` starting from the single point (from_x, from_row),
/// positions clipped to [0, x_limit].
ReachFrontier reach_from(const BinarySequence& x, const BinarySequence& y, StepMax step_max, std::size_t from_x,
                         std::size_t from_row, std::size_t to_row, std::size_t x_limit);

/// Exhaustive DFS over every gap choice; independent of the DP. Guarded to
/// |X| <= 20 and L <= 10 (kOracleSize otherwise). Entry j is the set of
/// positions reachable on row j.
std::vector<std::vector<std::size_t>> brute_force_reachable(const BinarySequence& x, const BinarySequence& y,
                                                            std::uint32_t m, std::size_t length);

}  // namespace clairvoyant
