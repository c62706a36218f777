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

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "clairvoyant/core/rational.hpp"

namespace clairvoyant::scaleup {

/// The growth exponents of the hierarchy. The base lambda = 2^(1/2) and the
/// rank-probability exponent c1 = 2 are fixed and not part of the tuple.
struct ExponentTuple {
  Rational delta;
  Rational gamma;
  Rational phi;
  Rational tau;
  Rational tau_prime;
  Rational omega;
  Rational chi;

  /// (0.15, 0.18, 0.24, 1.75, 2.5, 4.5, 0.015), the published feasible choice.
  static ExponentTuple reference();

  /// 2 tau / (tau - 1); throws kInvalidArgument when tau == 1.
  Rational tau_bar() const;

  /// Flat key=value text with keys delta, gamma, phi, tau, tau_prime, omega,
  /// chi. Missing keys keep their reference values; '#' starts a comment.
  static ExponentTuple parse(std::string_view text);

  std::string to_string() const;
  friend bool operator==(const ExponentTuple&, const ExponentTuple&) = default;
};

enum class Constraint {
  kRankGrowth,              // 1 < tau < 2
  kEmergingRankWindow,      // tau < tau' < tau^2
  kScaleOrder,              // 0 < delta < gamma < phi < 1
  kCompoundRankFloor,       // tau <= 2 - phi
  kCompoundSize,            // phi < tau delta
  kScaleGeometric,          // 2 (gamma - delta) = phi - gamma
  kTrapExponent,            // 2 gamma - tau delta + 1 < omega
  kCorrelatedTrapExponent,  // 4 (gamma + delta) < omega (4 - tau)
  kEmergingContribution,    // 4 gamma + 6 delta + tau' < 2 omega
  kEmergingHole,            // tau (delta + 1) < tau'
  kHoleExponentGap,         // tau chi < gamma - delta
  kHoleExponentScale,       // taubar chi < 1 - tau delta
  kHoleExponentTrap,        // taubar chi < omega - 2 tau delta
};

inline constexpr std::size_t kConstraintCount = 13;
inline constexpr std::array<Constraint, kConstraintCount> kAllConstraints = {
    Constraint::kRankGrowth,         Constraint::kEmergingRankWindow,      Constraint::kScaleOrder,
    Constraint::kCompoundRankFloor,  Constraint::kCompoundSize,            Constraint::kScaleGeometric,
    Constraint::kTrapExponent,       Constraint::kCorrelatedTrapExponent, Constraint::kEmergingContribution,
    Constraint::kEmergingHole,       Constraint::kHoleExponentGap,         Constraint::kHoleExponentScale,
    Constraint::kHoleExponentTrap,
};

const char* name(Constraint c) noexcept;
const char* formula(Constraint c) noexcept;

/// Outcome of one constraint. `lhs` holds the constrained expression(s) and
/// `rhs` the bound(s), both exact.
struct ConstraintCheck {
  Constraint id;
  std::vector<Rational> lhs;
  std::vector<Rational> rhs;
  bool ok = false;

  std::string to_json() const;
};

struct ExponentReport {
  std::vector<ConstraintCheck> checks;

  bool pass() const noexcept;
  std::vector<Constraint> violated() const;
  /// One JSON object per line.
  std::string to_jsonl() const;
};

/// Evaluates all thirteen constraints with exact rational arithmetic. Throws
/// kInvalidArgument if some exponent is not positive.
ExponentReport verify_exponents(const ExponentTuple& e);

/// A perturbation of the reference tuple aimed at one constraint.
struct ExponentMutation {
  Constraint target;
  ExponentTuple tuple;
  std::string change;
};

/// One mutation per constraint, each changing as few exponents as possible.
/// Five constraints are implied by the others, so their mutations necessarily
/// break further constraints as well; see the README.
std::vector<ExponentMutation> curated_mutations();

}  // namespace clairvoyant::scaleup
