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

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "clairvoyant/core/rational.hpp"
#include "clairvoyant/scaleup/exponents.hpp"

namespace clairvoyant::scaleup {

/// Constants the construction only asks to be "large enough" or "small
/// enough". The defaults are arbitrary knobs, reported alongside results.
struct ScaleConstants {
  Rational big_lambda = 10;  // multiplier in the slope-bound recurrence
  long double c2 = 0.25L;    // rank probability prefactor
  long double c3 = 4.0L;     // hole probability prefactor
  std::optional<Rational> r1;  // first-level rank; 2m when absent
};

/// Parameters of one level. Every size-like quantity is kept as its
/// logarithm to base lambda = 2^(1/2) (a rational multiple of R), so the
/// defining identities hold exactly; values are materialized only on demand.
struct MazeryParams {
  int level = 1;
  std::uint32_t m = 1;
  ExponentTuple exponents;
  ScaleConstants constants;
  Rational rank;  // R
  Rational slb;
  long double sigma_x = 0;
  long double sigma_y = 0;
  long double q_tri = 0;
  long double q_inv = 0;
  bool w_is_zero = false;  // the first level has no trap bound at all

  Rational log_T() const { return rank; }
  Rational log_Delta() const { return exponents.delta * rank; }
  Rational log_Gamma() const { return exponents.gamma * rank; }
  Rational log_Phi() const { return exponents.phi * rank; }
  Rational log_Psi() const { return (exponents.gamma + exponents.phi) * rank / 2; }
  Rational log_w() const { return -exponents.omega * rank; }

  long double T() const;
  long double Delta() const;
  long double Gamma() const;
  long double Phi() const;
  long double Psi() const;
  long double w() const;
  /// The next level's rank threshold R* = tau R.
  Rational heavy_threshold() const { return exponents.tau * rank; }
};

/// lambda^(log) as a long double.
long double lambda_pow(const Rational& log);

/// First-level parameters for gap bound m: slb = sigma_x = 1/2m, sigma_y = m,
/// R = 2m (unless overridden), q_tri = 0, q_inv = 1/2, w = 0.
MazeryParams base_params(std::uint32_t m, const ExponentTuple& e, const ScaleConstants& constants = {});

/// Level-k parameters obtained by iterating the scale-up recurrences from
/// `base`. Throws kConstraint naming the violated constraints if the
/// exponents fail verification.
MazeryParams level_params(const ExponentTuple& e, const MazeryParams& base, int k);

struct LevelCheck {
  int level = 1;
  bool slope_sanity = false;
  bool q_bounds = false;
  // Comparisons with the following level; absent on the last row.
  std::optional<long double> delta_ratio;  // Delta_k / Delta_{k+1}
  std::optional<bool> delta_ratio_ok;      // ratio < slb^2 / 2
  std::optional<bool> sigma_monotone;      // sigma_{k+1} >= sigma_k
};

struct LevelTable {
  std::vector<MazeryParams> levels;
  std::vector<LevelCheck> checks;
  /// Largest K such that every check on levels 1..K holds (0 if none).
  int feasibility_horizon = 0;

  /// CSV with header level,R,T,Δ,Γ,Φ,Ψ,w,qtri,qinv,sigx,sigy.
  std::string to_csv() const;
  std::string checks_jsonl() const;
};

LevelTable level_table(const ExponentTuple& e, const MazeryParams& base, int levels);

/// p(r) = c2 r^(-2) lambda^(-r).
long double rank_prob(long double r, long double c2);
/// h(r) = c3 lambda^(-chi r).
long double hole_prob(long double r, long double c3, const Rational& chi);
/// Upper bound tau_bar R on every rank at a level of rank R.
Rational rank_bound(const Rational& rank, const ExponentTuple& e);
/// Rank tau' R given to emerging walls.
Rational emerging_rank(const Rational& rank, const ExponentTuple& e);

}  // namespace clairvoyant::scaleup
