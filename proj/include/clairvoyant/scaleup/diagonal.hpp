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

#include "clairvoyant/core/rational.hpp"

namespace clairvoyant::scaleup {

struct RationalPoint {
  Rational x;
  Rational y;
};

/// Signed height of `a` above the line through u and v_prime:
/// (a.y - u.y) - slope(u, v_prime) * (a.x - u.x). Throws kInvalidArgument
/// unless u.x < v_prime.x.
Rational diagonal_distance(const RationalPoint& u, const RationalPoint& v_prime, const RationalPoint& a);

/// h1 < diagonal_distance(u, v_prime, w) <= h2.
bool in_channel(const RationalPoint& u, const RationalPoint& v_prime, const Rational& h1, const Rational& h2,
                const RationalPoint& w);

}  // namespace clairvoyant::scaleup
