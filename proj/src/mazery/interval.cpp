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

#include "clairvoyant/mazery/interval.hpp"

#include <algorithm>

#include <fmt/format.h>

#include "clairvoyant/core/errors.hpp"

namespace clairvoyant::mazery {

namespace {

Interval make(std::int64_t left, std::int64_t right, Closure closure) {
  if (left < -1 || left > right) {
    throw Error(ErrorCode::kInvalidArgument, fmt::format("invalid interval bounds ({}, {})", left, right));
  }
  return Interval{left, right, closure};
}

}  // namespace

const char* to_string(Orientation o) noexcept { return o == Orientation::kVertical ? "v" : "h"; }

const char* to_string(WallKind k) noexcept {
  switch (k) {
    case WallKind::kBaseRun:
      return "base-run";
    case WallKind::kEmerging:
      return "emerging";
    case WallKind::kCompound:
      return "compound";
  }
  return "?";
}

Interval Interval::right_closed(std::int64_t left, std::int64_t right) {
  return make(left, right, Closure::kRightClosed);
}

Interval Interval::closed(std::int64_t left, std::int64_t right) { return make(left, right, Closure::kClosed); }

bool intersects(const Interval& a, const Interval& b) noexcept {
  return std::max(a.first_point(), b.first_point()) <= std::min(a.last_point(), b.last_point());
}

bool contains(const Interval& outer, const Interval& inner) noexcept {
  if (inner.first_point() > inner.last_point()) return true;
  return outer.first_point() <= inner.first_point() && inner.last_point() <= outer.last_point();
}

std::string WallValue::to_json() const {
  return fmt::format(R"({{"orientation":"{}","left":{},"right":{},"rank":{},"kind":"{}"}})", to_string(orientation),
                     body.left, body.right, rank, to_string(kind));
}

}  // namespace clairvoyant::mazery
