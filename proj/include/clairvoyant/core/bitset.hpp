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
#include <span>
#include <vector>

namespace clairvoyant {

/// Fixed-size packed bit vector with the handful of word-parallel operations
/// the reachability DP needs. Bits past size() are kept zero.
class Bitset {
 public:
  using Word = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  Bitset() = default;
  explicit Bitset(std::size_t size);

  std::size_t size() const noexcept { return size_; }
  bool test(std::size_t pos) const noexcept {
    return pos < size_ && ((words_[pos / kWordBits] >> (pos % kWordBits)) & 1U);
  }
  void set(std::size_t pos) noexcept;
  void reset(std::size_t pos) noexcept;
  void clear() noexcept;

  /// Sets every bit in the closed range [first, last], clipped to size().
  void set_range(std::size_t first, std::size_t last) noexcept;

  bool none() const noexcept;
  std::size_t count() const noexcept;

  std::optional<std::size_t> find_first() const noexcept;
  /// Smallest set position >= from.
  std::optional<std::size_t> find_next(std::size_t from) const noexcept;
  /// Largest set position <= upto.
  std::optional<std::size_t> find_prev(std::size_t upto) const noexcept;

  Bitset& operator&=(const Bitset& other) noexcept;
  Bitset& operator|=(const Bitset& other) noexcept;
  /// Complement within size().
  Bitset operator~() const;

  friend bool operator==(const Bitset&, const Bitset&) = default;

  std::vector<std::size_t> positions() const;
  std::span<const Word> words() const noexcept { return words_; }
  std::span<Word> words() noexcept { return words_; }

  /// Zeroes any bits in the last word beyond size().
  void trim() noexcept;

 private:
  std::size_t size_ = 0;
  std::vector<Word> words_;
};

}  // namespace clairvoyant
