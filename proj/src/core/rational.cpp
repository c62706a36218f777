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

#include "clairvoyant/core/rational.hpp"

#include <cctype>
#include <charconv>

#include <fmt/format.h>

#include "clairvoyant/core/errors.hpp"

namespace clairvoyant {

namespace {

using boost::multiprecision::cpp_int;

cpp_int parse_int(std::string_view digits, std::string_view whole) {
  if (digits.empty()) throw ParseError(0, fmt::format("malformed rational '{}'", whole));
  cpp_int v = 0;
  for (char c : digits) {
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw ParseError(0, fmt::format("malformed rational '{}'", whole));
    }
    v = v * 10 + (c - '0');
  }
  return v;
}

cpp_int pow10(unsigned n) {
  cpp_int r = 1;
  for (unsigned i = 0; i < n; ++i) r *= 10;
  return r;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const std::string_view whole = text;
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  bool negative = false;
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  Rational value;
  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    const cpp_int num = parse_int(text.substr(0, slash), whole);
    const cpp_int den = parse_int(text.substr(slash + 1), whole);
    if (den == 0) throw ParseError(slash, fmt::format("zero denominator in '{}'", whole));
    value = Rational(num, den);
  } else {
    int exponent = 0;
    if (const auto e = text.find_first_of("eE"); e != std::string_view::npos) {
      const auto exp_text = text.substr(e + 1);
      const auto* first = exp_text.data();
      const auto* last = first + exp_text.size();
      if (!exp_text.empty() && *first == '+') ++first;
      const auto [ptr, ec] = std::from_chars(first, last, exponent);
      if (ec != std::errc{} || ptr != last) throw ParseError(e, fmt::format("malformed exponent in '{}'", whole));
      text = text.substr(0, e);
    }
    const auto dot = text.find('.');
    const std::string_view int_part = text.substr(0, dot);
    const std::string_view frac_part = dot == std::string_view::npos ? std::string_view{} : text.substr(dot + 1);
    if (int_part.empty() && frac_part.empty()) throw ParseError(0, fmt::format("malformed rational '{}'", whole));
    const cpp_int ip = int_part.empty() ? cpp_int(0) : parse_int(int_part, whole);
    const cpp_int fp = frac_part.empty() ? cpp_int(0) : parse_int(frac_part, whole);
    const cpp_int scale = pow10(static_cast<unsigned>(frac_part.size()));
    value = Rational(ip * scale + fp, scale);
    if (exponent > 0) value *= Rational(pow10(static_cast<unsigned>(exponent)));
    if (exponent < 0) value /= Rational(pow10(static_cast<unsigned>(-exponent)));
  }
  return negative ? Rational(-value) : value;
}

std::string to_string(const Rational& r) {
  const auto num = boost::multiprecision::numerator(r);
  const auto den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

double to_double(const Rational& r) { return r.convert_to<double>(); }

long double to_long_double(const Rational& r) { return r.convert_to<long double>(); }

}  // namespace clairvoyant
