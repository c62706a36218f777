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
#include <random>

#include "clairvoyant/core/sequence.hpp"

namespace clairvoyant {

/// Identifier written into every output that depends on random draws.
inline constexpr const char* kRngId = "splitmix64-subseed/mt19937_64/v1";

/// The t-th output (t = 0, 1, ...) of a SplitMix64 stream seeded with
/// master_seed. Pure function of its arguments.
std::uint64_t derive_subseed(std::uint64_t master_seed, std::uint64_t index) noexcept;

/// Generator for one trial. std::mt19937_64 is fully specified by the
/// standard, so streams are identical across platforms.
class TrialRng {
 public:
  explicit TrialRng(std::uint64_t subseed) : engine_(subseed) {}

  std::uint64_t next() { return engine_(); }
  int coin() { return static_cast<int>(engine_() >> 63); }
  std::uint64_t uniform(std::uint64_t lo, std::uint64_t hi);

  /// Fair-coin sequence of the given length, filled 64 symbols per draw.
  BinarySequence sequence(std::size_t length);
  /// Redraws symbols first..last (1-based, inclusive) of `seq`.
  void resample(BinarySequence& seq, std::size_t first, std::size_t last);

 private:
  std::mt19937_64 engine_;
};

}  // namespace clairvoyant
