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
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "clairvoyant/core/bitset.hpp"

namespace clairvoyant {

/// Finite 0/1 sequence indexed from 1. Bit i of the packed storage holds
/// symbol i; bit 0 is the origin slot and is always zero.
class BinarySequence {
 public:
  BinarySequence() : bits_(1) {}
  explicit BinarySequence(std::size_t length) : bits_(length + 1) {}

  /// Accepts only '0'/'1' characters; throws ParseError on anything else.
  static BinarySequence from_string(std::string_view text);
  static BinarySequence from_symbols(std::span<const std::uint8_t> symbols);

  /// File format: one line of '0'/'1' with an optional trailing '\n'.
  static BinarySequence parse_file_contents(std::string_view bytes);
  static BinarySequence load(const std::filesystem::path& path);

  std::size_t length() const noexcept { return bits_.size() - 1; }
  bool empty() const noexcept { return length() == 0; }

  /// Symbol at 1-based index i (0 < i <= length()).
  int operator[](std::size_t i) const noexcept { return bits_.test(i) ? 1 : 0; }
  int at(std::size_t i) const;
  void set(std::size_t i, int symbol);

  /// Packed view with bit i = symbol i, bit 0 zero.
  const Bitset& ones() const noexcept { return bits_; }
  /// Packed view with bit i = 1 iff symbol i is 0 (bit 0 zero).
  Bitset zeros() const;

  /// Overwrites the symbols from raw 64-bit words, low bit first, starting at index 1.
  void assign_words(std::span<const std::uint64_t> words);

  std::string to_string() const;

  friend bool operator==(const BinarySequence&, const BinarySequence&) = default;

 private:
  Bitset bits_;
};

}  // namespace clairvoyant
