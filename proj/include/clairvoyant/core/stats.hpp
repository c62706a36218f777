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

namespace clairvoyant {

/// Two-sided 95% normal quantile.
inline constexpr double kZ95 = 1.959963984540054;

struct WilsonInterval {
  double low = 0;
  double high = 1;
};

/// Wilson score interval for `successes` out of `trials` (trials > 0).
WilsonInterval wilson_interval(std::uint64_t successes, std::uint64_t trials, double z = kZ95);

}  // namespace clairvoyant
