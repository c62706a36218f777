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

#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <set>

#include "clairvoyant/core/errors.hpp"
#include "clairvoyant/core/rng.hpp"
#include "clairvoyant/mazery/walls.hpp"
#include "clairvoyant/scaleup/compound.hpp"
#include "clairvoyant/scaleup/diagonal.hpp"
#include "clairvoyant/scaleup/exponents.hpp"
#include "clairvoyant/scaleup/params.hpp"
#include "clairvoyant/scaleup/traps.hpp"
#include "test_support.hpp"

namespace clairvoyant::scaleup {
namespace {

using mazery::Closure;
using mazery::Orientation;
using mazery::WallKind;

Rational r(const char* text) { return parse_rational(text); }

/// The thirteen relations written out one by one, in declaration order.
std::vector<bool> relations(const ExponentTuple& e) {
  const Rational tb = 2 * e.tau / (e.tau - 1);
  return {
      1 < e.tau && e.tau < 2,
      e.tau < e.tau_prime && e.tau_prime < e.tau * e.tau,
      0 < e.delta && e.delta < e.gamma && e.gamma < e.phi && e.phi < 1,
      e.tau <= 2 - e.phi,
      e.phi < e.tau * e.delta,
      2 * (e.gamma - e.delta) == e.phi - e.gamma,
      2 * e.gamma - e.tau * e.delta + 1 < e.omega,
      4 * (e.gamma + e.delta) < e.omega * (4 - e.tau),
      4 * e.gamma + 6 * e.delta + e.tau_prime < 2 * e.omega,
      e.tau * (e.delta + 1) < e.tau_prime,
      e.tau * e.chi < e.gamma - e.delta,
      tb * e.chi < 1 - e.tau * e.delta,
      tb * e.chi < e.omega - 2 * e.tau * e.delta,
  };
}

std::set<Constraint> expected_violations(const ExponentTuple& e) {
  std::set<Constraint> out;
  const auto ok = relations(e);
  for (std::size_t i = 0; i < ok.size(); ++i) {
    if (!ok[i]) out.insert(kAllConstraints[i]);
  }
  return out;
}

std::set<Constraint> violated_set(const ExponentTuple& e) {
  const auto v = verify_exponents(e).violated();
  return {v.begin(), v.end()};
}

TEST(Exponents, ReferenceTuplePasses) {
  const auto report = verify_exponents(ExponentTuple::reference());
  EXPECT_TRUE(report.pass());
  EXPECT_EQ(report.checks.size(), 13U);
  EXPECT_TRUE(expected_violations(ExponentTuple::reference()).empty());
}

TEST(Exponents, TauTwoFailsRankGrowth) {
  auto e = ExponentTuple::reference();
  e.tau = 2;
  EXPECT_TRUE(violated_set(e).count(Constraint::kRankGrowth));
}

TEST(Exponents, GammaBreaksGeometricScale) {
  auto e = ExponentTuple::reference();
  e.gamma = r("0.19");
  EXPECT_TRUE(violated_set(e).count(Constraint::kScaleGeometric));
}

TEST(Exponents, AgreesWithDirectEvaluationOnRandomTuples) {
  std::mt19937_64 rng(1);
  auto pick = [&](int lo, int hi) { return Rational(lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo)), 1000); };
  for (int k = 0; k < 2000; ++k) {
    ExponentTuple e{pick(1, 400), pick(1, 500), pick(1, 900), pick(1001, 2400), pick(1000, 6000), pick(100, 8000),
                    pick(1, 100)};
    if (e.tau == 1) continue;
    EXPECT_EQ(violated_set(e), expected_violations(e));
  }
}

TEST(Exponents, CuratedMutationsFailTheirTarget) {
  const auto mutations = curated_mutations();
  ASSERT_EQ(mutations.size(), 13U);
  std::set<Constraint> targets;
  for (const auto& mutation : mutations) {
    targets.insert(mutation.target);
    const auto v = violated_set(mutation.tuple);
    EXPECT_EQ(v, expected_violations(mutation.tuple)) << name(mutation.target);
    EXPECT_TRUE(v.count(mutation.target)) << name(mutation.target);
  }
  EXPECT_EQ(targets.size(), 13U);
}

TEST(Exponents, IsolableMutationsFailOnlyTheirTarget) {
  const std::set<Constraint> implied = {Constraint::kRankGrowth, Constraint::kScaleOrder,
                                        Constraint::kCorrelatedTrapExponent, Constraint::kHoleExponentScale,
                                        Constraint::kHoleExponentTrap};
  for (const auto& mutation : curated_mutations()) {
    if (implied.count(mutation.target)) continue;
    EXPECT_EQ(violated_set(mutation.tuple), std::set<Constraint>{mutation.target}) << name(mutation.target);
  }
}

TEST(Exponents, RejectsNonPositiveFields) {
  auto e = ExponentTuple::reference();
  e.chi = 0;
  EXPECT_THROW(verify_exponents(e), Error);
}

TEST(Exponents, ParseKeyValueText) {
  const auto e = ExponentTuple::parse("# comment\ntau = 1.7\nchi=1/100\n");
  EXPECT_EQ(e.tau, r("1.7"));
  EXPECT_EQ(e.chi, Rational(1, 100));
  EXPECT_EQ(e.delta, r("0.15"));
  EXPECT_THROW(ExponentTuple::parse("beta=1"), ParseError);
  EXPECT_THROW(ExponentTuple::parse("tau"), ParseError);
}

TEST(Exponents, ReportJsonLines) {
  const auto lines = verify_exponents(ExponentTuple::reference()).to_jsonl();
  EXPECT_EQ(std::count(lines.begin(), lines.end(), '\n'), 13);
  EXPECT_NE(lines.find(R"("constraint":"rank_growth")"), std::string::npos);
  EXPECT_NE(lines.find(R"("ok":true)"), std::string::npos);
}

TEST(Exponents, GeometricScaleIsExactInExponentSpace) {
  // log(Delta/Gamma) = log(Gamma/Phi) / 2 holds exactly for the reference tuple.
  const auto p = base_params(10, ExponentTuple::reference());
  EXPECT_EQ(2 * (p.log_Delta() - p.log_Gamma()), p.log_Gamma() - p.log_Phi());
}

TEST(Params, BaseLevel) {
  const auto e = ExponentTuple::reference();
  const auto base = base_params(10, e);
  EXPECT_EQ(base.rank, 20);
  EXPECT_EQ(base.slb, Rational(1, 20));
  EXPECT_EQ(base.sigma_y, 10);
  EXPECT_EQ(base.q_tri, 0);
  EXPECT_EQ(base.q_inv, 0.5L);
  EXPECT_EQ(base.w(), 0);
  const auto same = level_params(e, base, 1);
  EXPECT_EQ(same.rank, base.rank);
  EXPECT_EQ(same.sigma_x, base.sigma_x);
  EXPECT_EQ(same.q_inv, base.q_inv);
}

TEST(Params, RankGrowsGeometrically) {
  const auto e = ExponentTuple::reference();
  const auto base = base_params(10, e);
  EXPECT_EQ(level_params(e, base, 2).rank, 35);
  Rational expected = 20;
  for (int k = 1; k <= 8; ++k) {
    const auto p = level_params(e, base, k);
    EXPECT_EQ(p.rank, expected);
    EXPECT_EQ(p.level, k);
    expected *= e.tau;
  }
}

TEST(Params, DerivedQuantitiesFollowDefinitions) {
  const auto e = ExponentTuple::reference();
  const auto p = level_params(e, base_params(10, e), 3);
  const long double R = to_long_double(p.rank);
  const long double T = std::pow(std::sqrt(2.0L), R);
  EXPECT_NEAR(p.T() / T, 1.0L, 1e-15L);
  EXPECT_NEAR(p.Delta() / std::pow(T, to_long_double(e.delta)), 1.0L, 1e-15L);
  EXPECT_NEAR(p.Gamma() / std::pow(T, to_long_double(e.gamma)), 1.0L, 1e-15L);
  EXPECT_NEAR(p.Phi() / std::pow(T, to_long_double(e.phi)), 1.0L, 1e-15L);
  EXPECT_NEAR(p.Psi() / std::sqrt(p.Gamma() * p.Phi()), 1.0L, 1e-15L);
  EXPECT_NEAR(p.w() * std::pow(T, to_long_double(e.omega)), 1.0L, 1e-12L);
}

TEST(Params, RecurrencesMatchHandIteration) {
  const auto e = ExponentTuple::reference();
  const auto base = base_params(10, e);
  long double sx = 1.0L / 20;
  long double sy = 10;
  long double qt = 0;
  long double qi = 0.5L;
  long double R = 20;
  const long double lam = std::sqrt(2.0L);
  for (int k = 2; k <= 5; ++k) {
    // Slope bounds grow by Lambda slb^-3 Delta/Gamma, q by Delta* / T.
    const long double add = 10 * std::pow(20.0L, 3) * std::pow(lam, (0.15L - 0.18L) * R);
    sx += add;
    sy += add;
    const long double Rn = R * 1.75L;
    const long double qadd = std::pow(lam, 0.15L * Rn - R);
    qt += qadd;
    qi += qadd;
    R = Rn;
    const auto p = level_params(e, base, k);
    EXPECT_NEAR(p.sigma_x / sx, 1.0L, 1e-12L) << k;
    EXPECT_NEAR(p.sigma_y / sy, 1.0L, 1e-12L) << k;
    EXPECT_NEAR(p.q_tri, qt, 1e-12L * std::max(1.0L, qt)) << k;
    EXPECT_NEAR(p.q_inv, qi, 1e-12L * std::max(1.0L, qi)) << k;
  }
}

TEST(Params, InvalidExponentsPropagate) {
  auto e = ExponentTuple::reference();
  e.tau = 2;
  try {
    level_params(e, base_params(10, ExponentTuple::reference()), 2);
    FAIL();
  } catch (const Error& err) {
    EXPECT_EQ(err.code(), ErrorCode::kConstraint);
    EXPECT_NE(std::string(err.what()).find("rank_growth"), std::string::npos);
  }
}

TEST(Params, TableReportsHorizonFromChecks) {
  const auto e = ExponentTuple::reference();
  const auto table = level_table(e, base_params(10, e), 8);
  ASSERT_EQ(table.levels.size(), 8U);
  int horizon = 0;
  for (std::size_t i = 0; i < table.checks.size(); ++i) {
    const auto& c = table.checks[i];
    const bool transition_ok = i == 0 || (*table.checks[i - 1].delta_ratio_ok && *table.checks[i - 1].sigma_monotone);
    if (!c.slope_sanity || !c.q_bounds || !transition_ok) break;
    horizon = c.level;
  }
  EXPECT_EQ(table.feasibility_horizon, horizon);
  EXPECT_GE(table.feasibility_horizon, 1);
  const auto csv = table.to_csv();
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "level,R,T,Δ,Γ,Φ,Ψ,w,qtri,qinv,sigx,sigy");
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 9);
}

TEST(Params, ProbabilityFunctions) {
  EXPECT_NEAR(rank_prob(20, 1) / (1.0L / 400 / 1024), 1.0L, 1e-15L);
  for (long double x = 5; x < 60; x += 1) {
    EXPECT_NEAR(rank_prob(x, 1) / rank_prob(x + 2, 1), ((x + 2) / x) * ((x + 2) / x) * 2, 1e-12L);
    EXPECT_GT(rank_prob(x, 0.25L), rank_prob(x + 1, 0.25L));
    EXPECT_GT(hole_prob(x, 4, r("0.015")), hole_prob(x + 1, 4, r("0.015")));
  }
  const long double slope = (std::log(hole_prob(50, 4, r("0.015"))) - std::log(hole_prob(20, 4, r("0.015")))) / 30;
  EXPECT_NEAR(slope, -0.015L * std::log(std::sqrt(2.0L)), 1e-15L);
  const auto e = ExponentTuple::reference();
  EXPECT_EQ(rank_bound(20, e), Rational(2 * 7, 3) * 20 / 1);  // 2tau/(tau-1) = 14/3
  EXPECT_EQ(emerging_rank(20, e), 50);
}

/// Largest k with 2^k <= d^2, by repeated doubling.
std::int64_t index_by_doubling(std::int64_t d) {
  if (d <= 1) return d;
  const std::int64_t sq = d * d;
  std::int64_t k = 0;
  std::int64_t p = 1;
  while (p * 2 <= sq) {
    p *= 2;
    ++k;
  }
  return k;
}

TEST(Compound, DistanceIndex) {
  EXPECT_EQ(compound_distance_index(0), 0);
  EXPECT_EQ(compound_distance_index(1), 1);
  EXPECT_EQ(compound_distance_index(4), 4);
  for (std::int64_t d = 0; d < 5000; ++d) EXPECT_EQ(compound_distance_index(d), index_by_doubling(d)) << d;
  EXPECT_THROW(compound_distance_index(-1), Error);
}

WallValue wall(std::int64_t left, std::int64_t right, std::int64_t rank) {
  return WallValue{Interval{left, right, Closure::kRightClosed}, rank, Orientation::kVertical, WallKind::kBaseRun};
}

TEST(Compound, RankExamples) {
  const auto adjacent = compound_walls({wall(0, 3, 10), wall(3, 6, 12)}, 100, 11);
  ASSERT_FALSE(adjacent.empty());
  EXPECT_EQ(adjacent[0].index, 0);
  EXPECT_EQ(adjacent[0].rank, 22);
  const auto spaced = compound_walls({wall(0, 3, 10), wall(7, 9, 12)}, 100, 11);
  ASSERT_EQ(spaced.size(), 1U);
  EXPECT_EQ(spaced[0].distance, 4);
  EXPECT_EQ(spaced[0].rank, 18);
  EXPECT_TRUE(compound_walls({wall(0, 3, 10), wall(7, 9, 12)}, 3, 11).empty());  // gap beyond phi
  EXPECT_TRUE(compound_walls({wall(0, 3, 12), wall(7, 9, 12)}, 100, 11).empty());  // both heavy
}

TEST(Compound, WallStatusNeedsEmptyGap) {
  const auto out = compound_walls({wall(0, 2, 10), wall(4, 6, 10), wall(10, 12, 10)}, 100, 11);
  bool saw_inner_pair = false;
  for (const auto& c : out) {
    if (c.first.body.left == 0 && c.second.body.left == 10 && c.first.body.right == 2) {
      EXPECT_FALSE(c.is_wall);
    }
    if (c.first.body.left == 0 && c.second.body.left == 4) {
      saw_inner_pair = true;
      EXPECT_TRUE(c.is_wall);
    }
  }
  EXPECT_TRUE(saw_inner_pair);
}

TEST(Compound, SecondPassExtendsFirstPassResults) {
  // Light, heavy, light: the second pass appends the last light wall to the first compound.
  const auto out = compound_walls({wall(0, 2, 10), wall(3, 5, 20), wall(6, 8, 10)}, 100, 11);
  bool triple = false;
  for (const auto& c : out) triple |= c.first.kind == WallKind::kCompound && c.second.body.left == 6;
  EXPECT_TRUE(triple);
}

TEST(Compound, RankLawOnRandomLayouts) {
  std::mt19937_64 rng(6);
  std::size_t pairs = 0;
  while (pairs < 10000) {
    std::vector<WallValue> walls;
    std::int64_t pos = 0;
    for (int i = 0; i < 8; ++i) {
      pos += static_cast<std::int64_t>(rng() % 40);
      const std::int64_t size = 1 + static_cast<std::int64_t>(rng() % 10);
      walls.push_back(wall(pos, pos + size, 8 + static_cast<std::int64_t>(rng() % 12)));
      pos += size;
    }
    // Phi >= lambda, as at every real level; see CloseGapBelowLambda for the edge.
    const long double phi = 2 + static_cast<long double>(rng() % 60);
    for (const auto& c : compound_walls(walls, phi, 14)) {
      ++pairs;
      const std::int64_t d = c.second.body.left - c.first.body.right;
      EXPECT_EQ(c.distance, d);
      EXPECT_EQ(c.rank, c.first.rank + c.second.rank - index_by_doubling(d));
      EXPECT_LE(c.rank, c.first.rank + c.second.rank);
      EXPECT_GE(static_cast<long double>(c.rank), c.first.rank + c.second.rank - 2 * std::log2(phi) - 1e-12L);
    }
  }
}

TEST(Compound, CloseGapBelowLambda) {
  // i(1) = 1 exceeds log_lambda(Phi) when Phi < lambda, so the lower rank
  // bound only holds from Phi >= lambda on.
  const auto out = compound_walls({wall(0, 3, 10), wall(4, 6, 12)}, 1.2L, 11);
  ASSERT_EQ(out.size(), 1U);
  EXPECT_EQ(out[0].rank, 21);
  EXPECT_LT(static_cast<long double>(out[0].rank), 22 - 2 * std::log2(1.2L));
}

TEST(Promotion, WallMargin) {
  const auto scanned = Interval{0, 30, Closure::kRightClosed};
  EXPECT_TRUE(promote_cleanness(scanned, Endpoint::kRight, {}, 12, true));
  EXPECT_FALSE(promote_cleanness(scanned, Endpoint::kRight, {}, 12, false));
  // Phi = 12: the margin is 4; a wall ending 3 before the end breaks cleanness.
  EXPECT_FALSE(promote_cleanness(scanned, Endpoint::kRight, {wall(20, 27, 5)}, 12, true));
  EXPECT_TRUE(promote_cleanness(scanned, Endpoint::kRight, {wall(20, 26, 5)}, 12, true));
  EXPECT_FALSE(promote_cleanness(scanned, Endpoint::kLeft, {wall(3, 8, 5)}, 12, true));
  EXPECT_TRUE(promote_cleanness(scanned, Endpoint::kLeft, {wall(4, 8, 5)}, 12, true));
}

TEST(Promotion, AgreesWithDefinitionOnRandomLayouts) {
  std::mt19937_64 rng(13);
  for (int k = 0; k < 2000; ++k) {
    std::vector<WallValue> walls;
    for (int i = 0; i < 4; ++i) {
      const std::int64_t l = static_cast<std::int64_t>(rng() % 60);
      walls.push_back(wall(l, l + 1 + static_cast<std::int64_t>(rng() % 8), 5));
    }
    const auto scanned = Interval{static_cast<std::int64_t>(rng() % 20), 40 + static_cast<std::int64_t>(rng() % 20),
                                  Closure::kRightClosed};
    const long double phi = static_cast<long double>(rng() % 40) + 0.5L;
    const auto endpoint = (rng() & 1U) ? Endpoint::kLeft : Endpoint::kRight;
    bool expected = true;
    for (const auto& w : walls) {
      if (w.body.left < scanned.left || w.body.right > scanned.right) continue;
      const long double gap = endpoint == Endpoint::kRight ? scanned.right - w.body.right : w.body.left - scanned.left;
      if (3 * gap < phi) expected = false;
    }
    EXPECT_EQ(promote_cleanness(scanned, endpoint, walls, phi, true), expected);
  }
}

TEST(Promotion, TrapDistance) {
  const mazery::Rectangle q{{0, 0}, {100, 100}};
  const mazery::Rectangle near{{10, 10}, {12, 12}};
  const mazery::Rectangle outside{{101, 0}, {105, 2}};
  EXPECT_EQ(distance({5, 11}, near), 5);
  EXPECT_EQ(distance({11, 11}, near), 0);
  EXPECT_EQ(distance({20, 30}, near), 18);
  EXPECT_TRUE(promote_trap_cleanness({0, 0}, q, {}, 5, true));
  EXPECT_FALSE(promote_trap_cleanness({5, 11}, q, {near}, 6, true));
  EXPECT_TRUE(promote_trap_cleanness({5, 11}, q, {near}, 5, true));
  EXPECT_TRUE(promote_trap_cleanness({100, 0}, q, {outside}, 50, true));
}

TEST(Finish, AllHeavyKeepsEverything) {
  const LevelStructures cur{{wall(0, 5, 20), wall(30, 35, 20)}, {}};
  const auto compounds = compound_walls(cur.walls, 100, 15);
  EXPECT_TRUE(compounds.empty());
  const std::vector<WallValue> fresh{wall(40, 50, 30)};
  const auto next = finish_step(cur, fresh, {}, 15, 2.0);
  EXPECT_EQ(next.walls.size(), 3U);
}

TEST(Finish, DominantLightWallTakesContainedWallsAlong) {
  const LevelStructures cur{{wall(10, 20, 5), wall(12, 15, 30), wall(50, 52, 30)},
                            {mazery::Rectangle{{0, 0}, {1, 1}}}};
  const auto next = finish_step(cur, {}, {}, 15, 3.0);
  ASSERT_EQ(next.walls.size(), 1U);
  EXPECT_EQ(next.walls[0].body.left, 50);
  EXPECT_TRUE(next.traps.empty());
}

TEST(Finish, NoLightWallSurvives) {
  std::mt19937_64 rng(3);
  for (int k = 0; k < 500; ++k) {
    LevelStructures cur;
    std::vector<WallValue> fresh;
    for (int i = 0; i < 10; ++i) {
      const std::int64_t l = static_cast<std::int64_t>(rng() % 200);
      cur.walls.push_back(wall(l, l + 1 + static_cast<std::int64_t>(rng() % 10), 5 + static_cast<std::int64_t>(rng() % 20)));
      fresh.push_back(wall(l, l + 3, 5 + static_cast<std::int64_t>(rng() % 20)));
    }
    const auto next = finish_step(cur, fresh, {}, 15, 4.0);
    for (const auto& w : next.walls) EXPECT_GE(w.rank, 15);
  }
}

TEST(Diagonal, Identities) {
  const RationalPoint u{0, 0};
  const RationalPoint v{10, 4};
  EXPECT_EQ(diagonal_distance(u, v, {5, 2}), 0);
  EXPECT_EQ(diagonal_distance(u, v, {5, 3}), 1);
  EXPECT_THROW(diagonal_distance(v, u, {0, 0}), Error);
  EXPECT_TRUE(in_channel(u, v, 0, 1, {5, 3}));
  EXPECT_FALSE(in_channel(u, v, 0, 1, {5, 2}));
  std::mt19937_64 rng(8);
  for (int k = 0; k < 1000; ++k) {
    auto pt = [&] { return RationalPoint{Rational(static_cast<int>(rng() % 200), 1 + static_cast<int>(rng() % 5)),
                                         Rational(static_cast<int>(rng() % 200), 1 + static_cast<int>(rng() % 5))}; };
    const RationalPoint a = pt();
    RationalPoint b = pt();
    b.x += a.x + 1;
    const Rational sigma_y(1 + static_cast<int>(rng() % 5));
    // Keep slope(u, v') at most 1/sigma_y.
    b.y = a.y + (b.x - a.x) * Rational(static_cast<int>(rng() % 100), 100) / sigma_y;
    const RationalPoint w = pt();
    const RationalPoint w2 = pt();
    const Rational slope = (b.y - a.y) / (b.x - a.x);
    const Rational diff = diagonal_distance(a, b, w2) - diagonal_distance(a, b, w);
    EXPECT_EQ(diff, (w2.y - w.y) - slope * (w2.x - w.x));
    EXPECT_LE(abs(diff), abs(w2.y - w.y) + abs(w2.x - w.x) / sigma_y);
  }
}

TEST(Correlated, EventNeedsFourDisjointTraps) {
  const Interval window{0, 100, Closure::kClosed};
  EXPECT_FALSE(detect_correlated_event(window, 0, 4, {}));
  std::vector<mazery::Rectangle> traps;
  for (int i = 0; i < 4; ++i) traps.push_back({{10 * i, 1}, {10 * i + 5, 3}});
  EXPECT_TRUE(detect_correlated_event(window, 0, 4, traps));
  traps.pop_back();
  EXPECT_FALSE(detect_correlated_event(window, 0, 4, traps));
  traps.push_back({{0, 30}, {5, 31}});  // outside J = [0, 20]
  EXPECT_FALSE(detect_correlated_event(window, 0, 4, traps));
}

TEST(Correlated, MatchesSubsetSearch) {
  std::mt19937_64 rng(14);
  for (int k = 0; k < 500; ++k) {
    std::vector<mazery::Rectangle> traps;
    const int n = static_cast<int>(rng() % 9);
    for (int i = 0; i < n; ++i) {
      const std::int64_t x = static_cast<std::int64_t>(rng() % 40);
      traps.push_back({{x, 0}, {x + static_cast<std::int64_t>(rng() % 8), 2}});
    }
    bool expected = false;
    for (unsigned mask = 0; mask < (1U << n) && !expected; ++mask) {
      if (std::popcount(mask) < 4) continue;
      bool disjoint = true;
      for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
          if ((mask >> i & 1U) && (mask >> j & 1U)) {
            disjoint &= traps[i].hi.x < traps[j].lo.x || traps[j].hi.x < traps[i].lo.x;
          }
        }
      }
      expected = disjoint;
    }
    EXPECT_EQ(detect_correlated_event(Interval{0, 60, Closure::kClosed}, 0, 1, traps), expected);
  }
}

TEST(Correlated, WindowLengths) {
  EXPECT_NEAR(correlated_window_length(1, Rational(1, 20), 2, 3), 29 * 20 * 2, 1e-9L);
  EXPECT_NEAR(correlated_window_length(2, Rational(1, 20), 2, 3), 9 * 20 * 3, 1e-9L);
  EXPECT_THROW(correlated_window_length(3, Rational(1, 20), 2, 3), Error);
}

// Level-one setup: m = 2, Delta = 3, J = [1, 10], window I = [1, 16].
MissingHoleQuery small_query() {
  return MissingHoleQuery{Interval{1, 16, Closure::kClosed}, 1, 3, 2, 7, Rational(1, 4), StepMax(6)};
}

/// The missing-hole event evaluated from its definition with explicit path search.
bool missing_hole_by_definition(const BinarySequence& x, const BinarySequence& y, const MissingHoleQuery& q) {
  const std::int64_t start = q.b + q.delta;
  for (std::int64_t end = start + q.m; end < start + 2 * q.m && end <= q.b + 3 * q.delta; ++end) {
    bool constant = true;
    for (std::int64_t i = start + 2; i <= end; ++i) constant &= y[static_cast<std::size_t>(i)] == y[static_cast<std::size_t>(start + 1)];
    if (!constant || Rational(2 * q.m) >= q.heavy_threshold) continue;
    const std::int64_t max_size = static_cast<std::int64_t>(floor_of(Rational(end - start) / q.slb).convert_to<long long>());
    bool hole = false;
    // ]a1 - delta, a2 + delta] inside [left, right] read as real intervals.
    for (std::int64_t a1 = q.window.left + q.delta; a1 < q.window.right - q.delta && !hole; ++a1) {
      if (x[static_cast<std::size_t>(a1)] != y[static_cast<std::size_t>(start)]) continue;
      std::set<std::int64_t> cur{a1};
      for (std::int64_t row = start + 1; row <= end; ++row) {
        std::set<std::int64_t> next;
        for (const auto p : cur) {
          for (std::int64_t d = 1; d <= static_cast<std::int64_t>(q.step_max.value); ++d) {
            const std::int64_t t = p + d;
            if (t <= std::min(a1 + max_size, q.window.right - q.delta) && x[static_cast<std::size_t>(t)] == y[static_cast<std::size_t>(row)]) next.insert(t);
          }
        }
        cur = next;
      }
      hole = !cur.empty();
    }
    if (!hole) return true;
  }
  return false;
}

TEST(MissingHole, NoWallNoEvent) {
  const auto x = BinarySequence::from_string("0101010101010101");
  const auto y = BinarySequence::from_string("0101010101");
  EXPECT_FALSE(detect_missing_hole_event(x, y, small_query()));
}

TEST(MissingHole, GoodHoleNegatesEvent) {
  const auto x = BinarySequence::from_string("0101010101010101");
  const auto y = BinarySequence::from_string("0100110101");  // wall ]4,6] of ones, Y(4) = 0
  EXPECT_TRUE(missing_hole_by_definition(x, y, small_query()) == detect_missing_hole_event(x, y, small_query()));
  EXPECT_FALSE(detect_missing_hole_event(x, y, small_query()));
}

TEST(MissingHole, ExhaustiveAgreementAndEstimator) {
  const auto q = small_query();
  std::mt19937_64 rng(44);
  int informative = 0;
  for (int round = 0; round < 6; ++round) {
    // Sparse ones in X make holes through a run of ones rare.
    BinarySequence x(16);
    for (std::size_t i = 1; i <= 16; ++i) x.set(i, rng() % 4 == 0);
    std::uint64_t events = 0;
    for (std::uint64_t mask = 0; mask < (1U << 10); ++mask) {
      const auto y = testing::bits(mask, 10);
      const bool lib = detect_missing_hole_event(x, y, q);
      EXPECT_EQ(lib, missing_hole_by_definition(x, y, q)) << mask;
      events += lib;
    }
    const double p = static_cast<double>(events) / 1024.0;
    const auto est = estimate_missing_hole_trap(x, testing::bits(0, 10), q, 4000, 100 + round, 0.1);
    const double sigma = std::sqrt(p * (1 - p) / 4000.0);
    EXPECT_LE(std::abs(est.conditional.p_hat - p), 3 * sigma + 1e-12) << "p=" << p;
    informative += p > 0.01;
  }
  EXPECT_GT(informative, 0);
}

TEST(MissingHole, EstimatorGuards) {
  const auto x = BinarySequence(16);
  EXPECT_THROW(estimate_missing_hole_trap(x, BinarySequence(10), small_query(), 99, 0, 0.1), Error);
  try {
    estimate_missing_hole_trap(x, BinarySequence(9), small_query(), 100, 0, 0.1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInputBounds);
  }
}

TEST(Emerging, DesignationOrder) {
  const Interval a{0, 10, Closure::kRightClosed};
  const Interval b{5, 15, Closure::kRightClosed};
  const Interval c{20, 30, Closure::kRightClosed};
  const Interval d{25, 35, Closure::kRightClosed};
  // Overlapping type-1 pre-walls: the earlier one wins.
  auto out = designate_emerging_walls({std::vector<Interval>{b, a}, {}, {}}, 50, Orientation::kVertical);
  ASSERT_EQ(out.size(), 1U);
  EXPECT_EQ(out[0].body, a);
  EXPECT_EQ(out[0].kind, WallKind::kEmerging);
  // Type 3 is processed before type 2.
  out = designate_emerging_walls({std::vector<Interval>{}, {c}, {d}}, 50, Orientation::kVertical);
  ASSERT_EQ(out.size(), 1U);
  EXPECT_EQ(out[0].body, d);
}

TEST(Emerging, BarrierEstimateOnCertainEvent) {
  const auto always = [](const BinarySequence&, const BinarySequence&, const Interval&) { return true; };
  const auto never = [](const BinarySequence&, const BinarySequence&, const Interval&) { return false; };
  const Interval body{0, 20, Closure::kRightClosed};
  const auto yes = detect_emerging_barrier(body, BinarySequence(20), 1, always, 10, 2, 200, 1, 0.1);
  EXPECT_TRUE(yes.barrier_estimated);
  EXPECT_EQ(yes.best_window, (Interval{1, 17, Closure::kClosed}));
  const auto no = detect_emerging_barrier(body, BinarySequence(20), 2, never, 10, 2, 200, 1, 0.1);
  EXPECT_FALSE(no.barrier_estimated);
  EXPECT_THROW(detect_emerging_barrier(body, BinarySequence(20), 4, never, 10, 2, 200, 1, 0.1), Error);
  EXPECT_THROW(detect_emerging_barrier(body, BinarySequence(20), 1, never, 10, 2, 50, 1, 0.1), Error);
}

TEST(Emerging, PrewallShapes) {
  // Wall-free body flanked by wall-free space.
  EXPECT_TRUE(is_emerging_prewall(Interval{10, 20, Closure::kRightClosed}, {}, 3, 15));
  // A heavy wall inside the body rules out the external shape.
  EXPECT_FALSE(is_emerging_prewall(Interval{10, 20, Closure::kRightClosed}, {wall(12, 14, 30)}, 3, 15));
}

}  // namespace
}  // namespace clairvoyant::scaleup
