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

#include "clairvoyant/scaleup/diagonal.hpp"

#include "clairvoyant/core/errors.hpp"

namespace clairvoyant::scaleup {

Rational diagonal_distance(const RationalPoint& u, const RationalPoint& v_prime, const RationalPoint& a) {
  if (!(u.x < v_prime.x)) throw Error(ErrorCode::kInvalidArgument, "diagonal needs u.x < v'.x");
  const Rational slope = (v_prime.y - u.y) / (v_prime.x - u.x);
  return (a.y - u.y) - slope * (a.x - u.x);
}

bool in_channel(const RationalPoint& u, const RationalPoint& v_prime, const Rational& h1, const Rational& h2,
                const RationalPoint& w) {
  const Rational d = diagonal_distance(u, v_prime, w);
  return h1 < d && d <= h2;
}

}  // namespace clairvoyant::scaleup
