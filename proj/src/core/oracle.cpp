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

#include <algorithm>
#include <functional>
#include <set>

#include <fmt/format.h>

#include "clairvoyant/core/embedding.hpp"
#include "clairvoyant/core/errors.hpp"

namespace clairvoyant {

namespace {
constexpr std::size_t kOracleMaxX = 20;
constexpr std::size_t kOracleMaxRows = 10;
}  // namespace

std::vector<std::vector<std::size_t>> brute_force_reachable(const BinarySequence& x, const BinarySequence& y,
                                                            std::uint32_t m, std::size_t length) {
  if (x.length() > kOracleMaxX || length > kOracleMaxRows) {
    throw Error(ErrorCode::kOracleSize, fmt::format("oracle limited to |X| <= {} and L <= {} (got {}, {})",
                                                    kOracleMaxX, kOracleMaxRows, x.length(), length));
  }
  if (length > y.length()) {
    throw Error(ErrorCode::kInputBounds, fmt::format("prefix length {} exceeds |Y| = {}", length, y.length()));
  }
  if (m == 0) throw Error(ErrorCode::kInvalidArgument, "m must be >= 1");

  std::vector<std::set<std::size_t>> rows(length + 1);
  // Plain recursion over every gap sequence, no memoisation.
  std::function<void(std::size_t, std::size_t)> dfs = [&](std::size_t pos, std::size_t row) {
    rows[row].insert(pos);
    if (row == length) return;
    for (std::size_t d = 1; d <= m; ++d) {
      const std::size_t next = pos + d;
      if (next > x.length()) break;
      if (x.at(next) == y.at(row + 1)) dfs(next, row + 1);
    }
  };
  dfs(0, 0);

  std::vector<std::vector<std::size_t>> out;
  out.reserve(rows.size());
  for (const auto& r : rows) out.emplace_back(r.begin(), r.end());
  return out;
}

}  // namespace clairvoyant
