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

#include "clairvoyant/scaleup/params.hpp"

#include <cmath>

#include <fmt/format.h>

#include "clairvoyant/core/errors.hpp"

namespace clairvoyant::scaleup {

namespace {

void require_valid(const ExponentTuple& e) {
  const auto report = verify_exponents(e);
  if (report.pass()) return;
  std::string names;
  for (const auto c : report.violated()) names += (names.empty() ? "" : ", ") + std::string(name(c));
  throw Error(ErrorCode::kConstraint, "exponent constraints violated: " + names);
}

/// One application of the scale-up recurrences.
MazeryParams next_level(const MazeryParams& p) {
  MazeryParams n = p;
  n.level = p.level + 1;
  n.rank = p.rank * p.exponents.tau;
  n.w_is_zero = false;
  const long double slb = to_long_double(p.slb);
  const long double sigma_step =
      to_long_double(p.constants.big_lambda) / (slb * slb * slb) * lambda_pow(p.log_Delta() - p.log_Gamma());
  n.sigma_x = p.sigma_x + sigma_step;
  n.sigma_y = p.sigma_y + sigma_step;
  const long double q_step = lambda_pow(n.log_Delta() - p.log_T());
  n.q_tri = p.q_tri + q_step;
  n.q_inv = p.q_inv + q_step;
  return n;
}

}  // namespace

long double lambda_pow(const Rational& log) { return std::exp2l(to_long_double(log) / 2); }

long double MazeryParams::T() const { return lambda_pow(log_T()); }
long double MazeryParams::Delta() const { return lambda_pow(log_Delta()); }
long double MazeryParams::Gamma() const { return lambda_pow(log_Gamma()); }
long double MazeryParams::Phi() const { return lambda_pow(log_Phi()); }
long double MazeryParams::Psi() const { return lambda_pow(log_Psi()); }
long double MazeryParams::w() const { return w_is_zero ? 0.0L : lambda_pow(log_w()); }

MazeryParams base_params(std::uint32_t m, const ExponentTuple& e, const ScaleConstants& constants) {
  if (m == 0) throw Error(ErrorCode::kInvalidArgument, "m must be positive");
  MazeryParams p;
  p.level = 1;
  p.m = m;
  p.exponents = e;
  p.constants = constants;
  p.rank = constants.r1.value_or(Rational(2 * static_cast<std::int64_t>(m)));
  p.slb = Rational(1, 2 * static_cast<std::int64_t>(m));
  p.sigma_x = to_long_double(p.slb);
  p.sigma_y = m;
  p.q_tri = 0;
  p.q_inv = 0.5L;
  p.w_is_zero = true;
  return p;
}

MazeryParams level_params(const ExponentTuple& e, const MazeryParams& base, int k) {
  if (k < 1) throw Error(ErrorCode::kInvalidArgument, "level must be at least 1");
  require_valid(e);
  MazeryParams p = base;
  p.exponents = e;
  while (p.level < base.level + k - 1) p = next_level(p);
  return p;
}

LevelTable level_table(const ExponentTuple& e, const MazeryParams& base, int levels) {
  if (levels < 1) throw Error(ErrorCode::kInvalidArgument, "levels must be at least 1");
  require_valid(e);
  LevelTable table;
  MazeryParams p = base;
  p.exponents = e;
  for (int k = 1; k <= levels; ++k) {
    table.levels.push_back(p);
    if (k < levels) p = next_level(p);
  }
  for (std::size_t i = 0; i < table.levels.size(); ++i) {
    const auto& cur = table.levels[i];
    LevelCheck c;
    c.level = cur.level;
    const long double slb = to_long_double(cur.slb);
    const long double r = to_long_double(cur.rank);
    c.slope_sanity = 1.0L / (2 * r) <= cur.sigma_x / 2 && cur.sigma_x / 2 <= slb && slb <= cur.sigma_x &&
                     2 <= cur.sigma_y && cur.sigma_x * cur.sigma_y < 1 - slb;
    c.q_bounds = cur.q_tri < 0.05L && cur.q_inv < 0.55L;
    if (i + 1 < table.levels.size()) {
      const auto& nxt = table.levels[i + 1];
      c.delta_ratio = lambda_pow(cur.log_Delta() - nxt.log_Delta());
      c.delta_ratio_ok = *c.delta_ratio < slb * slb / 2;
      c.sigma_monotone = nxt.sigma_x >= cur.sigma_x && nxt.sigma_y >= cur.sigma_y;
    }
    table.checks.push_back(c);
  }
  // Level K is within the horizon when levels 1..K pass their own checks and
  // every transition between them passes as well.
  for (std::size_t i = 0; i < table.checks.size(); ++i) {
    const auto& c = table.checks[i];
    if (!c.slope_sanity || !c.q_bounds) break;
    if (i > 0) {
      const auto& prev = table.checks[i - 1];
      if (!*prev.delta_ratio_ok || !*prev.sigma_monotone) break;
    }
    table.feasibility_horizon = c.level;
  }
  return table;
}

std::string LevelTable::to_csv() const {
  std::string out = "level,R,T,Δ,Γ,Φ,Ψ,w,qtri,qinv,sigx,sigy\n";
  for (const auto& p : levels) {
    out += fmt::format("{},{:.10g},{:.10g},{:.10g},{:.10g},{:.10g},{:.10g},{:.10g},{:.10g},{:.10g},{:.10g},{:.10g}\n",
                       p.level, to_long_double(p.rank), p.T(), p.Delta(), p.Gamma(), p.Phi(), p.Psi(), p.w(), p.q_tri,
                       p.q_inv, p.sigma_x, p.sigma_y);
  }
  return out;
}

std::string LevelTable::checks_jsonl() const {
  std::string out;
  for (const auto& c : checks) {
    out += fmt::format(R"({{"level":{},"slope_sanity":{},"q_bounds":{})", c.level, c.slope_sanity, c.q_bounds);
    if (c.delta_ratio) {
      out += fmt::format(R"(,"delta_ratio":{:.10g},"delta_ratio_ok":{},"sigma_monotone":{})", *c.delta_ratio,
                         *c.delta_ratio_ok, *c.sigma_monotone);
    }
    out += "}\n";
  }
  out += fmt::format("{{\"feasibility_horizon\":{}}}\n", feasibility_horizon);
  return out;
}

long double rank_prob(long double r, long double c2) { return c2 / (r * r) * std::exp2l(-r / 2); }

long double hole_prob(long double r, long double c3, const Rational& chi) {
  return c3 * std::exp2l(-to_long_double(chi) * r / 2);
}

Rational rank_bound(const Rational& rank, const ExponentTuple& e) { return e.tau_bar() * rank; }

Rational emerging_rank(const Rational& rank, const ExponentTuple& e) { return e.tau_prime * rank; }

}  // namespace clairvoyant::scaleup
