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

#include "clairvoyant/core/rng.hpp"

#include <vector>

namespace clairvoyant {

std::uint64_t derive_subseed(std::uint64_t master_seed, std::uint64_t index) noexcept {
  std::uint64_t z = master_seed + (index + 1) * 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::uint64_t TrialRng::uniform(std::uint64_t lo, std::uint64_t hi) {
  return std::uniform_int_distribution<std::uint64_t>(lo, hi)(engine_);
}

BinarySequence TrialRng::sequence(std::size_t length) {
  std::vector<std::uint64_t> words((length + 63) / 64);
  for (auto& w : words) w = engine_();
  BinarySequence seq(length);
  seq.assign_words(words);
  return seq;
}

void TrialRng::resample(BinarySequence& seq, std::size_t first, std::size_t last) {
  std::uint64_t word = 0;
  int left = 0;
  for (std::size_t i = first; i <= last; ++i) {
    if (left == 0) {
      word = engine_();
      left = 64;
    }
    seq.set(i, static_cast<int>(word & 1U));
    word >>= 1;
    --left;
  }
}

}  // namespace clairvoyant
