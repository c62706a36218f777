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

#include "clairvoyant/scaleup/exponents.hpp"

#include <algorithm>
#include <sstream>

#include <fmt/format.h>

#include "clairvoyant/core/errors.hpp"

namespace clairvoyant::scaleup {

namespace {

Rational dec(const char* text) { return parse_rational(text); }

std::string json_value(const std::vector<Rational>& values) {
  if (values.size() == 1) return fmt::format("{}", to_double(values[0]));
  std::string out = "[";
  for (std::size_t i = 0; i < values.size(); ++i) {
    out += fmt::format("{}{}", i ? "," : "", to_double(values[i]));
  }
  return out + "]";
}

std::string exact_value(const std::vector<Rational>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) out += (i ? " " : "") + to_string(values[i]);
  return out;
}

ConstraintCheck check(Constraint id, std::vector<Rational> lhs, std::vector<Rational> rhs, bool ok) {
  return ConstraintCheck{id, std::move(lhs), std::move(rhs), ok};
}

}  // namespace

ExponentTuple ExponentTuple::reference() {
  return ExponentTuple{dec("0.15"), dec("0.18"), dec("0.24"), dec("1.75"), dec("2.5"), dec("4.5"), dec("0.015")};
}

Rational ExponentTuple::tau_bar() const {
  if (tau == 1) throw Error(ErrorCode::kInvalidArgument, "tau_bar is undefined for tau = 1");
  return 2 * tau / (tau - 1);
}

ExponentTuple ExponentTuple::parse(std::string_view text) {
  ExponentTuple e = reference();
  std::size_t offset = 0;
  while (offset <= text.size()) {
    std::size_t end = text.find('\n', offset);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(offset, end - offset);
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    const auto first = line.find_first_not_of(" \t\r");
    if (first != std::string_view::npos) {
      const auto eq = line.find('=');
      if (eq == std::string_view::npos) {
        throw ParseError(offset + first, fmt::format("expected key=value, got '{}'", line));
      }
      auto key = line.substr(0, eq);
      key.remove_prefix(std::min(key.size(), key.find_first_not_of(" \t")));
      key = key.substr(0, key.find_last_not_of(" \t\r") + 1);
      Rational value;
      try {
        value = parse_rational(line.substr(eq + 1));
      } catch (const ParseError& err) {
        throw ParseError(offset + eq + 1, err.what());
      }
      if (key == "delta") {
        e.delta = value;
      } else if (key == "gamma") {
        e.gamma = value;
      } else if (key == "phi") {
        e.phi = value;
      } else if (key == "tau") {
        e.tau = value;
      } else if (key == "tau_prime") {
        e.tau_prime = value;
      } else if (key == "omega") {
        e.omega = value;
      } else if (key == "chi") {
        e.chi = value;
      } else {
        throw ParseError(offset + first, fmt::format("unknown exponent '{}'", key));
      }
    }
    offset = end + 1;
  }
  return e;
}

std::string ExponentTuple::to_string() const {
  using clairvoyant::to_string;
  return fmt::format("delta={} gamma={} phi={} tau={} tau_prime={} omega={} chi={}", to_string(delta),
                     to_string(gamma), to_string(phi), to_string(tau), to_string(tau_prime), to_string(omega),
                     to_string(chi));
}

const char* name(Constraint c) noexcept {
  switch (c) {
    case Constraint::kRankGrowth:
      return "rank_growth";
    case Constraint::kEmergingRankWindow:
      return "emerging_rank_window";
    case Constraint::kScaleOrder:
      return "scale_order";
    case Constraint::kCompoundRankFloor:
      return "compound_rank_floor";
    case Constraint::kCompoundSize:
      return "compound_size";
    case Constraint::kScaleGeometric:
      return "scale_geometric";
    case Constraint::kTrapExponent:
      return "trap_exponent";
    case Constraint::kCorrelatedTrapExponent:
      return "correlated_trap_exponent";
    case Constraint::kEmergingContribution:
      return "emerging_contribution";
    case Constraint::kEmergingHole:
      return "emerging_hole";
    case Constraint::kHoleExponentGap:
      return "hole_exponent_gap";
    case Constraint::kHoleExponentScale:
      return "hole_exponent_scale";
    case Constraint::kHoleExponentTrap:
      return "hole_exponent_trap";
  }
  return "?";
}

const char* formula(Constraint c) noexcept {
  switch (c) {
    case Constraint::kRankGrowth:
      return "1 < tau < 2";
    case Constraint::kEmergingRankWindow:
      return "tau < tau_prime < tau^2";
    case Constraint::kScaleOrder:
      return "0 < delta < gamma < phi < 1";
    case Constraint::kCompoundRankFloor:
      return "tau <= 2 - phi";
    case Constraint::kCompoundSize:
      return "phi < tau*delta";
    case Constraint::kScaleGeometric:
      return "2*(gamma - delta) = phi - gamma";
    case Constraint::kTrapExponent:
      return "2*gamma - tau*delta + 1 < omega";
    case Constraint::kCorrelatedTrapExponent:
      return "4*(gamma + delta) < omega*(4 - tau)";
    case Constraint::kEmergingContribution:
      return "4*gamma + 6*delta + tau_prime < 2*omega";
    case Constraint::kEmergingHole:
      return "tau*(delta + 1) < tau_prime";
    case Constraint::kHoleExponentGap:
      return "tau*chi < gamma - delta";
    case Constraint::kHoleExponentScale:
      return "tau_bar*chi < 1 - tau*delta";
    case Constraint::kHoleExponentTrap:
      return "tau_bar*chi < omega - 2*tau*delta";
  }
  return "?";
}

std::string ConstraintCheck::to_json() const {
  return fmt::format(
      R"({{"constraint":"{}","lhs":{},"rhs":{},"ok":{},"relation":"{}","lhs_exact":"{}","rhs_exact":"{}"}})",
      name(id), json_value(lhs), json_value(rhs), ok, formula(id), exact_value(lhs), exact_value(rhs));
}

bool ExponentReport::pass() const noexcept {
  return std::all_of(checks.begin(), checks.end(), [](const ConstraintCheck& c) { return c.ok; });
}

std::vector<Constraint> ExponentReport::violated() const {
  std::vector<Constraint> out;
  for (const auto& c : checks) {
    if (!c.ok) out.push_back(c.id);
  }
  return out;
}

std::string ExponentReport::to_jsonl() const {
  std::string out;
  for (const auto& c : checks) out += c.to_json() + "\n";
  return out;
}

ExponentReport verify_exponents(const ExponentTuple& e) {
  const auto& [d, g, f, t, tp, w, x] = e;
  for (const Rational* v : {&d, &g, &f, &t, &tp, &w, &x}) {
    if (*v <= 0) throw Error(ErrorCode::kInvalidArgument, "every exponent must be positive");
  }
  const Rational zero(0);
  const Rational one(1);
  const Rational two(2);
  // tau_bar is undefined at tau = 1; both hole constraints then fail.
  const bool has_bar = t != 1;
  const Rational tbx = has_bar ? e.tau_bar() * x : Rational(0);

  ExponentReport r;
  r.checks.push_back(check(Constraint::kRankGrowth, {t}, {one, two}, 1 < t && t < 2));
  r.checks.push_back(check(Constraint::kEmergingRankWindow, {tp}, {t, t * t}, t < tp && tp < t * t));
  r.checks.push_back(check(Constraint::kScaleOrder, {d, g, f}, {zero, one}, 0 < d && d < g && g < f && f < 1));
  r.checks.push_back(check(Constraint::kCompoundRankFloor, {t}, {2 - f}, t <= 2 - f));
  r.checks.push_back(check(Constraint::kCompoundSize, {f}, {t * d}, f < t * d));
  r.checks.push_back(check(Constraint::kScaleGeometric, {2 * (g - d)}, {f - g}, 2 * (g - d) == f - g));
  r.checks.push_back(check(Constraint::kTrapExponent, {2 * g - t * d + 1}, {w}, 2 * g - t * d + 1 < w));
  r.checks.push_back(check(Constraint::kCorrelatedTrapExponent, {4 * (g + d)}, {w * (4 - t)}, 4 * (g + d) < w * (4 - t)));
  r.checks.push_back(check(Constraint::kEmergingContribution, {4 * g + 6 * d + tp}, {2 * w}, 4 * g + 6 * d + tp < 2 * w));
  r.checks.push_back(check(Constraint::kEmergingHole, {t * (d + 1)}, {tp}, t * (d + 1) < tp));
  r.checks.push_back(check(Constraint::kHoleExponentGap, {t * x}, {g - d}, t * x < g - d));
  r.checks.push_back(check(Constraint::kHoleExponentScale, {tbx}, {1 - t * d}, has_bar && tbx < 1 - t * d));
  r.checks.push_back(check(Constraint::kHoleExponentTrap, {tbx}, {w - 2 * t * d}, has_bar && tbx < w - 2 * t * d));
  return r;
}

std::vector<ExponentMutation> curated_mutations() {
  const ExponentTuple base = ExponentTuple::reference();
  std::vector<ExponentMutation> out;
  auto add = [&](Constraint target, std::string change, auto&& edit) {
    ExponentTuple t = base;
    edit(t);
    out.push_back(ExponentMutation{target, t, std::move(change)});
  };
  add(Constraint::kRankGrowth, "tau=2 chi=0.01", [](ExponentTuple& t) {
    t.tau = dec("2");
    t.chi = dec("0.01");
  });
  add(Constraint::kEmergingRankWindow, "tau_prime=5.99", [](ExponentTuple& t) { t.tau_prime = dec("5.99"); });
  add(Constraint::kScaleOrder, "gamma=0.82", [](ExponentTuple& t) { t.gamma = dec("0.82"); });
  add(Constraint::kCompoundRankFloor, "tau=1.77", [](ExponentTuple& t) { t.tau = dec("1.77"); });
  add(Constraint::kCompoundSize, "tau=1.6", [](ExponentTuple& t) { t.tau = dec("1.6"); });
  add(Constraint::kScaleGeometric, "gamma=0.19", [](ExponentTuple& t) { t.gamma = dec("0.19"); });
  add(Constraint::kTrapExponent, "delta=0.01 gamma=0.012 phi=0.016 tau=1.8 tau_prime=1.85 omega=1 chi=0.001",
      [](ExponentTuple& t) {
        t = ExponentTuple{dec("0.01"), dec("0.012"), dec("0.016"), dec("1.8"), dec("1.85"), dec("1"), dec("0.001")};
      });
  add(Constraint::kCorrelatedTrapExponent, "tau=4.27 tau_prime=5.57", [](ExponentTuple& t) {
    t.tau = dec("4.27");
    t.tau_prime = dec("5.57");
  });
  add(Constraint::kEmergingContribution, "omega=1.84", [](ExponentTuple& t) { t.omega = dec("1.84"); });
  add(Constraint::kEmergingHole, "tau_prime=1.78", [](ExponentTuple& t) { t.tau_prime = dec("1.78"); });
  add(Constraint::kHoleExponentGap, "chi=0.05", [](ExponentTuple& t) { t.chi = dec("0.05"); });
  add(Constraint::kHoleExponentScale, "chi=0.183", [](ExponentTuple& t) { t.chi = dec("0.183"); });
  add(Constraint::kHoleExponentTrap, "omega=1.18 chi=0.148", [](ExponentTuple& t) {
    t.omega = dec("1.18");
    t.chi = dec("0.148");
  });
  return out;
}

}  // namespace clairvoyant::scaleup
