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

#include "clairvoyant/core/embedding.hpp"

#include <algorithm>
#include <utility>

#include <fmt/format.h>
#include <fmt/ranges.h>

#include "clairvoyant/core/errors.hpp"

namespace clairvoyant {

namespace {

// Copies bits [0, x_limit] of `src` into a bitset of size x_limit + 1.
Bitset clip(const Bitset& src, std::size_t x_limit) {
  Bitset out(x_limit + 1);
  auto dst = out.words();
  const auto in = src.words();
  std::copy_n(in.begin(), std::min(in.size(), dst.size()), dst.begin());
  out.trim();
  return out;
}

struct RowMasks {
  Bitset ones;
  Bitset zeros;

  RowMasks(const BinarySequence& x, std::size_t x_limit)
      : ones(clip(x.ones(), x_limit)), zeros(clip(x.zeros(), x_limit)) {}

  const Bitset& for_symbol(int symbol) const noexcept { return symbol ? ones : zeros; }
};

}  // namespace

StepMax::StepMax(std::uint32_t v) : value(v) {
  if (v == 0) throw Error(ErrorCode::kInvalidArgument, "step_max must be >= 1");
}

ReachFrontier ReachFrontier::origin(std::size_t x_limit) {
  ReachFrontier f{0, Bitset(x_limit + 1)};
  f.positions.set(0);
  return f;
}

std::string ReachFrontier::to_json() const {
  return fmt::format(R"({{"row":{},"positions":[{}]}})", row, fmt::join(list(), ","));
}

std::string EmbeddingPath::to_json() const {
  return fmt::format(R"({{"m":{},"steps":[{}]}})", gap_bound, fmt::join(steps, ","));
}

ReachFrontier frontier_step(const ReachFrontier& prev, const Bitset& match_mask, StepMax step_max) {
  const std::size_t size = std::max(prev.positions.size(), match_mask.size());
  ReachFrontier next{prev.row + 1, Bitset(size)};
  // Union of the windows [p+1, p+s]; each bit is written at most once because
  // a window only starts past the end of the previous one.
  std::size_t uncovered = 0;
  for (auto p = prev.positions.find_first(); p; p = prev.positions.find_next(*p + 1)) {
    const std::size_t lo = std::max(*p + 1, uncovered);
    const std::size_t hi = *p + step_max.value;
    if (lo <= hi) {
      next.positions.set_range(lo, hi);
      uncovered = hi + 1;
    }
    if (uncovered >= size) break;
  }
  next.positions &= match_mask;
  return next;
}

std::vector<ReachFrontier> all_frontiers(const BinarySequence& x, const BinarySequence& y, StepMax step_max,
                                         std::size_t length) {
  if (length > y.length()) {
    throw Error(ErrorCode::kInputBounds, fmt::format("prefix length {} exceeds |Y| = {}", length, y.length()));
  }
  const RowMasks masks(x, x.length());
  std::vector<ReachFrontier> rows;
  rows.reserve(length + 1);
  rows.push_back(ReachFrontier::origin(x.length()));
  for (std::size_t j = 1; j <= length; ++j) {
    rows.push_back(frontier_step(rows.back(), masks.for_symbol(y[j]), step_max));
  }
  return rows;
}

PrefixResult embeddable_prefix(const BinarySequence& x, const BinarySequence& y, std::uint32_t m,
                               std::size_t length) {
  const StepMax step_max(m);
  if (length > y.length()) {
    throw Error(ErrorCode::kInputBounds, fmt::format("prefix length {} exceeds |Y| = {}", length, y.length()));
  }
  const RowMasks masks(x, x.length());
  ReachFrontier frontier = ReachFrontier::origin(x.length());
  for (std::size_t j = 1; j <= length; ++j) {
    frontier = frontier_step(frontier, masks.for_symbol(y[j]), step_max);
    if (frontier.empty()) {
      frontier.row = length;
      break;
    }
  }
  const bool ok = !frontier.empty();
  return {ok, std::move(frontier)};
}

std::optional<EmbeddingPath> extract_embedding(const BinarySequence& x, const BinarySequence& y, std::uint32_t m,
                                               std::size_t length) {
  const StepMax step_max(m);
  const auto rows = all_frontiers(x, y, step_max, length);
  auto last = rows.back().positions.find_first();
  if (!last) return std::nullopt;

  EmbeddingPath path{std::vector<std::size_t>(length), m};
  std::size_t p = *last;
  for (std::size_t j = length; j >= 1; --j) {
    path.steps[j - 1] = p;
    const std::size_t lo = p > m ? p - m : 0;
    const auto pred = rows[j - 1].positions.find_next(lo);
    // A member of row j always has a predecessor in [p - m, p - 1].
    if (!pred || *pred >= p) throw Error(ErrorCode::kStructure, "frontier without predecessor");
    p = *pred;
  }
  return path;
}

bool check_embedding(const BinarySequence& x, const BinarySequence& y, const EmbeddingPath& path) {
  if (path.gap_bound == 0 || path.length() > y.length()) return false;
  std::size_t prev = 0;
  for (std::size_t i = 0; i < path.length(); ++i) {
    const std::size_t n = path.steps[i];
    if (n <= prev || n - prev > path.gap_bound || n > x.length()) return false;
    if (x[n] != y[i + 1]) return false;
    prev = n;
  }
  return true;
}

EmbeddingPath compose_embeddings(const EmbeddingPath& p1, const EmbeddingPath& p2) {
  EmbeddingPath out{{}, p1.gap_bound * p2.gap_bound};
  out.steps.reserve(p1.length());
  for (std::size_t idx : p1.steps) {
    if (idx == 0 || idx > p2.length()) {
      throw Error(ErrorCode::kCompositionDomain,
                  fmt::format("step {} outside the domain 1..{} of the outer embedding", idx, p2.length()));
    }
    out.steps.push_back(p2.steps[idx - 1]);
  }
  return out;
}

ReachFrontier reach_from(const BinarySequence& x, const BinarySequence& y, StepMax step_max, std::size_t from_x,
                         std::size_t from_row, std::size_t to_row, std::size_t x_limit) {
  ReachFrontier frontier{from_row, Bitset(x_limit + 1)};
  frontier.positions.set(from_x);
  if (to_row <= from_row) return frontier;
  const RowMasks masks(x, x_limit);
  for (std::size_t j = from_row + 1; j <= to_row; ++j) {
    if (j > y.length()) {
      frontier.positions.clear();
      frontier.row = to_row;
      break;
    }
    frontier = frontier_step(frontier, masks.for_symbol(y[j]), step_max);
    if (frontier.empty()) {
      frontier.row = to_row;
      break;
    }
  }
  return frontier;
}

bool reachable(const BinarySequence& x, const BinarySequence& y, StepMax step_max, std::size_t from_x,
               std::size_t from_row, std::size_t to_x, std::size_t to_row) {
  if (to_row < from_row || to_x < from_x) return false;
  if (to_row == from_row) return to_x == from_x;
  if (to_x > x.length()) return false;
  return reach_from(x, y, step_max, from_x, from_row, to_row, to_x).positions.test(to_x);
}

}  // namespace clairvoyant
