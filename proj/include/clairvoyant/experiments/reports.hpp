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
#include <string>
#include <vector>

namespace clairvoyant::experiments {

/// z-score of an observed rate against a hypothesised probability.
struct Hypothesis {
  std::string label;
  double probability = 0;
  double z = 0;
};

struct FrequencyReport {
  std::string check;
  std::uint32_t m = 0;
  std::uint32_t l = 0;  // wall size, 0 for the hole check
  std::int64_t position = 0;
  std::uint64_t samples = 0;
  std::uint64_t hits = 0;
  double rate = 0;
  double ci_low = 0;
  double ci_high = 0;
  std::vector<Hypothesis> hypotheses;
  std::uint64_t seed = 0;

  std::string to_json() const;
  std::string to_csv() const;
};

/// Rate at which ]position, position + l] is the body of a wall of a fresh
/// fair-coin sequence, compared with 2^-(l-1) (every constant block) and
/// 2^-l. Requires m <= l < 2m. Samples come from one generator stream seeded
/// with derive_subseed(seed, 0).
FrequencyReport wall_frequency_check(std::uint32_t m, std::uint32_t l, std::uint64_t samples, std::uint64_t seed,
                                     std::int64_t position = 0);

/// Rate at which a hole fitting a fixed vertical wall starts at a fixed
/// offset, for fresh fair-coin Y, compared with 1/2. X is constant on
/// ]m, 2m] and alternates elsewhere so that run is the only wall around.
FrequencyReport hole_frequency_check(std::uint32_t m, std::uint64_t samples, std::uint64_t seed,
                                     std::int64_t position = 0);

}  // namespace clairvoyant::experiments
