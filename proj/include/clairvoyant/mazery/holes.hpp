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

#include <optional>
#include <string>

#include "clairvoyant/core/embedding.hpp"
#include "clairvoyant/core/rational.hpp"
#include "clairvoyant/core/sequence.hpp"
#include "clairvoyant/mazery/interval.hpp"

namespace clairvoyant::mazery {

/// A hole J fitting a wall body B. For a vertical wall (B inside X) the hole
/// is an interval of Y, entered at (B.left, J.left) and left at (B.right,
/// J.right); horizontal walls swap the roles.
struct Hole {
  Interval interval;
  WallValue wall;
  Point entry;
  Point exit;

  std::string to_json() const;
};

/// Scans left endpoints in the closed range `starts` in increasing order and,
/// for each, sizes 1 .. floor(|B| / slb) in increasing order; returns the
/// first J for which exit is reachable from entry inside J x B under
/// `step_max`. Absent if none is found.
std::optional<Hole> find_fitting_hole(const WallValue& wall, const Interval& starts, const BinarySequence& x,
                                      const BinarySequence& y, const Rational& slb, StepMax step_max);

/// Level-1 goodness: every one-dimensional cleanness holds automatically, so
/// only trap-cleanness of the entry corner remains, which is X = Y there (or
/// the entry is the origin).
bool is_good_hole(const Hole& hole, const BinarySequence& x, const BinarySequence& y);

}  // namespace clairvoyant::mazery
