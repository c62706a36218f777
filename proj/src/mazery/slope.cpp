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

#include "clairvoyant/mazery/slope.hpp"

namespace clairvoyant::mazery {

bool slope_condition(Point u, Point v, const Rational& sigma_x, const Rational& sigma_y) {
  if (u.x >= v.x || u.y >= v.y || sigma_x <= 0 || sigma_y <= 0) return false;
  const Rational a(v.y - u.y);
  const Rational b(v.x - u.x);
  const Rational upper_bound = 1 / sigma_y;
  if (sigma_x > upper_bound) return false;
  if (!((a - 1) / b < upper_bound)) return false;
  if (b == 1) return true;
  return sigma_x < a / (b - 1);
}

}  // namespace clairvoyant::mazery
