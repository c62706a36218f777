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

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace clairvoyant {

using Rational = boost::multiprecision::cpp_rational;

/// Parses "3/20", "-2", "0.015" or "1.5e-2" exactly. Throws kParse.
Rational parse_rational(std::string_view text);

/// "p/q" (or "p" when q == 1).
std::string to_string(const Rational& r);
double to_double(const Rational& r);
long double to_long_double(const Rational& r);

inline Rational floor_of(const Rational& r) {
  using boost::multiprecision::cpp_int;
  cpp_int q = boost::multiprecision::numerator(r) / boost::multiprecision::denominator(r);
  if (r < 0 && Rational(q) != r) q -= 1;
  return Rational(q);
}

}  // namespace clairvoyant
