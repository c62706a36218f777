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

#include "clairvoyant/core/stats.hpp"

#include <algorithm>
#include <cmath>

#include "clairvoyant/core/errors.hpp"

namespace clairvoyant {

WilsonInterval wilson_interval(std::uint64_t successes, std::uint64_t trials, double z) {
  if (trials == 0) throw Error(ErrorCode::kUnderpowered, "Wilson interval needs at least one trial");
  const double n = static_cast<double>(trials);
  const double p = static_cast<double>(successes) / n;
  const double z2 = z * z;
  const double denom = 1 + z2 / n;
  const double centre = (p + z2 / (2 * n)) / denom;
  const double half = z * std::sqrt(p * (1 - p) / n + z2 / (4 * n * n)) / denom;
  // Clamp so that low <= p_hat <= high survives rounding at p = 0 or 1.
  return WilsonInterval{std::min(p, std::max(0.0, centre - half)), std::max(p, std::min(1.0, centre + half))};
}

}  // namespace clairvoyant
