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
#include "clairvoyant/mazery/interval.hpp"

namespace clairvoyant::mazery {

/// True iff some real v' with 0 <= v - v' < 1 coordinatewise has
/// sigma_x <= slope(u, v') <= 1 / sigma_y. Requires u < v in both
/// coordinates; returns false otherwise.
///
/// With A = v.y - u.y and B = v.x - u.x the attainable slopes form the open
/// interval ((A-1)/B, A/(B-1)) (unbounded above when B = 1), so the test is
/// three exact rational comparisons.
bool slope_condition(Point u, Point v, const Rational& sigma_x, const Rational& sigma_y);

}  // namespace clairvoyant::mazery
