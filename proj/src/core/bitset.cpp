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

#include "clairvoyant/core/bitset.hpp"

#include <algorithm>
#include <bit>

namespace clairvoyant {

namespace {

constexpr Bitset::Word kAllOnes = ~Bitset::Word{0};

// Mask with bits [lo, hi] set inside one word (0 <= lo <= hi < 64).
constexpr Bitset::Word span_mask(std::size_t lo, std::size_t hi) noexcept {
  const Bitset::Word upper = hi + 1 == Bitset::kWordBits ? kAllOnes : ((Bitset::Word{1} << (hi + 1)) - 1);
  return upper & (kAllOnes << lo);
}

}  // namespace

Bitset::Bitset(std::size_t size) : size_(size), words_((size + kWordBits - 1) / kWordBits, 0) {}

void Bitset::set(std::size_t pos) noexcept {
  if (pos < size_) words_[pos / kWordBits] |= Word{1} << (pos % kWordBits);
}

void Bitset::reset(std::size_t pos) noexcept {
  if (pos < size_) words_[pos / kWordBits] &= ~(Word{1} << (pos % kWordBits));
}

void Bitset::clear() noexcept { std::fill(words_.begin(), words_.end(), Word{0}); }

void Bitset::set_range(std::size_t first, std::size_t last) noexcept {
  if (size_ == 0 || first >= size_ || first > last) return;
  last = std::min(last, size_ - 1);
  std::size_t first_word = first / kWordBits;
  const std::size_t last_word = last / kWordBits;
  if (first_word == last_word) {
    words_[first_word] |= span_mask(first % kWordBits, last % kWordBits);
    return;
  }
  words_[first_word] |= span_mask(first % kWordBits, kWordBits - 1);
  for (++first_word; first_word < last_word; ++first_word) words_[first_word] = kAllOnes;
  words_[last_word] |= span_mask(0, last % kWordBits);
}

bool Bitset::none() const noexcept {
  return std::all_of(words_.begin(), words_.end(), [](Word w) { return w == 0; });
}

std::size_t Bitset::count() const noexcept {
  std::size_t total = 0;
  for (Word w : words_) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

std::optional<std::size_t> Bitset::find_first() const noexcept { return find_next(0); }

std::optional<std::size_t> Bitset::find_next(std::size_t from) const noexcept {
  if (from >= size_) return std::nullopt;
  std::size_t w = from / kWordBits;
  Word cur = words_[w] & (kAllOnes << (from % kWordBits));
  while (true) {
    if (cur != 0) return w * kWordBits + static_cast<std::size_t>(std::countr_zero(cur));
    if (++w == words_.size()) return std::nullopt;
    cur = words_[w];
  }
}

std::optional<std::size_t> Bitset::find_prev(std::size_t upto) const noexcept {
  if (size_ == 0) return std::nullopt;
  upto = std::min(upto, size_ - 1);
  std::size_t w = upto / kWordBits;
  Word cur = words_[w] & span_mask(0, upto % kWordBits);
  while (true) {
    if (cur != 0) return w * kWordBits + (kWordBits - 1 - static_cast<std::size_t>(std::countl_zero(cur)));
    if (w == 0) return std::nullopt;
    cur = words_[--w];
  }
}

Bitset& Bitset::operator&=(const Bitset& other) noexcept {
  const std::size_t n = std::min(words_.size(), other.words_.size());
  for (std::size_t i = 0; i < n; ++i) words_[i] &= other.words_[i];
  for (std::size_t i = n; i < words_.size(); ++i) words_[i] = 0;
  return *this;
}

Bitset& Bitset::operator|=(const Bitset& other) noexcept {
  const std::size_t n = std::min(words_.size(), other.words_.size());
  for (std::size_t i = 0; i < n; ++i) words_[i] |= other.words_[i];
  trim();
  return *this;
}

Bitset Bitset::operator~() const {
  Bitset out(size_);
  for (std::size_t i = 0; i < words_.size(); ++i) out.words_[i] = ~words_[i];
  out.trim();
  return out;
}

std::vector<std::size_t> Bitset::positions() const {
  std::vector<std::size_t> out;
  out.reserve(count());
  for (auto p = find_first(); p; p = find_next(*p + 1)) out.push_back(*p);
  return out;
}

void Bitset::trim() noexcept {
  if (size_ % kWordBits != 0 && !words_.empty()) {
    words_.back() &= span_mask(0, size_ % kWordBits - 1);
  }
}

}  // namespace clairvoyant
