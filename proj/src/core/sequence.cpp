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

#include "clairvoyant/core/sequence.hpp"

#include <fstream>
#include <iterator>

#include <fmt/format.h>

#include "clairvoyant/core/errors.hpp"

namespace clairvoyant {

BinarySequence BinarySequence::from_string(std::string_view text) {
  BinarySequence seq(text.size());
  for (std::size_t k = 0; k < text.size(); ++k) {
    const char c = text[k];
    if (c == '1') {
      seq.bits_.set(k + 1);
    } else if (c != '0') {
      throw ParseError(k, fmt::format("invalid byte 0x{:02x} at offset {}", static_cast<unsigned char>(c), k));
    }
  }
  return seq;
}

BinarySequence BinarySequence::from_symbols(std::span<const std::uint8_t> symbols) {
  BinarySequence seq(symbols.size());
  for (std::size_t k = 0; k < symbols.size(); ++k) {
    if (symbols[k] > 1) throw Error(ErrorCode::kInvalidArgument, fmt::format("symbol {} at index {} is not 0/1", symbols[k], k + 1));
    if (symbols[k] == 1) seq.bits_.set(k + 1);
  }
  return seq;
}

BinarySequence BinarySequence::parse_file_contents(std::string_view bytes) {
  if (!bytes.empty() && bytes.back() == '\n') bytes.remove_suffix(1);
  return from_string(bytes);
}

BinarySequence BinarySequence::load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, fmt::format("cannot open {}", path.string()));
  const std::string bytes{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  return parse_file_contents(bytes);
}

int BinarySequence::at(std::size_t i) const {
  if (i == 0 || i > length()) {
    throw Error(ErrorCode::kInputBounds, fmt::format("index {} outside 1..{}", i, length()));
  }
  return (*this)[i];
}

void BinarySequence::set(std::size_t i, int symbol) {
  if (i == 0 || i > length()) {
    throw Error(ErrorCode::kInputBounds, fmt::format("index {} outside 1..{}", i, length()));
  }
  if (symbol != 0 && symbol != 1) {
    throw Error(ErrorCode::kInvalidArgument, fmt::format("symbol {} is not 0 or 1", symbol));
  }
  if (symbol) {
    bits_.set(i);
  } else {
    bits_.reset(i);
  }
}

Bitset BinarySequence::zeros() const {
  Bitset out = ~bits_;
  out.reset(0);
  return out;
}

void BinarySequence::assign_words(std::span<const std::uint64_t> words) {
  auto dst = bits_.words();
  // Source bit k lands on destination bit k+1.
  std::uint64_t carry = 0;
  for (std::size_t w = 0; w < dst.size(); ++w) {
    const std::uint64_t src = w < words.size() ? words[w] : 0;
    dst[w] = (src << 1) | carry;
    carry = src >> 63;
  }
  bits_.trim();
}

std::string BinarySequence::to_string() const {
  std::string out(length(), '0');
  for (std::size_t i = 1; i <= length(); ++i) out[i - 1] = bits_.test(i) ? '1' : '0';
  return out;
}

}  // namespace clairvoyant
