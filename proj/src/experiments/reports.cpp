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

#include "clairvoyant/experiments/reports.hpp"

#include <cmath>

#include <fmt/format.h>

#include "clairvoyant/core/errors.hpp"
#include "clairvoyant/core/rng.hpp"
#include "clairvoyant/core/stats.hpp"
#include "clairvoyant/mazery/holes.hpp"

namespace clairvoyant::experiments {

namespace {

Hypothesis compare(std::string label, double p0, std::uint64_t hits, std::uint64_t samples) {
  const double n = static_cast<double>(samples);
  const double rate = static_cast<double>(hits) / n;
  return Hypothesis{std::move(label), p0, (rate - p0) / std::sqrt(p0 * (1 - p0) / n)};
}

FrequencyReport finish(FrequencyReport r) {
  if (r.samples == 0) throw Error(ErrorCode::kUnderpowered, "a frequency check needs at least one sample");
  const auto ci = wilson_interval(r.hits, r.samples);
  r.rate = static_cast<double>(r.hits) / static_cast<double>(r.samples);
  r.ci_low = ci.low;
  r.ci_high = ci.high;
  return r;
}

}  // namespace

std::string FrequencyReport::to_json() const {
  std::string hyp;
  for (const auto& h : hypotheses) {
    hyp += fmt::format(R"({}{{"label":"{}","probability":{:.9g},"z":{:.4f}}})", hyp.empty() ? "" : ",", h.label,
                       h.probability, h.z);
  }
  return fmt::format(
      R"({{"check":"{}","m":{},"l":{},"position":{},"samples":{},"hits":{},"rate":{:.9g},"ci_low":{:.9g},"ci_high":{:.9g},"hypotheses":[{}],"rng_id":"{}","seed":{}}})",
      check, m, l, position, samples, hits, rate, ci_low, ci_high, hyp, kRngId, seed);
}

std::string FrequencyReport::to_csv() const {
  std::string out = "check,m,l,position,samples,hits,rate,ci_low,ci_high,hypothesis,probability,z,rng_id,seed\n";
  for (const auto& h : hypotheses) {
    out += fmt::format("{},{},{},{},{},{},{:.9g},{:.9g},{:.9g},{},{:.9g},{:.4f},{},{}\n", check, m, l, position,
                       samples, hits, rate, ci_low, ci_high, h.label, h.probability, h.z, kRngId, seed);
  }
  return out;
}

FrequencyReport wall_frequency_check(std::uint32_t m, std::uint32_t l, std::uint64_t samples, std::uint64_t seed,
                                     std::int64_t position) {
  if (m == 0 || l < m || l >= 2 * m) {
    throw Error(ErrorCode::kInvalidArgument, fmt::format("wall size {} outside [m, 2m) for m = {}", l, m));
  }
  if (position < 0) throw Error(ErrorCode::kInvalidArgument, "position must be nonnegative");
  FrequencyReport r;
  r.check = "walls";
  r.m = m;
  r.l = l;
  r.position = position;
  r.samples = samples;
  r.seed = seed;
  TrialRng rng(derive_subseed(seed, 0));
  const auto length = static_cast<std::size_t>(position) + l;
  const auto first = static_cast<std::size_t>(position) + 1;
  for (std::uint64_t s = 0; s < samples; ++s) {
    const BinarySequence seq = rng.sequence(length);
    bool constant = true;
    for (std::size_t i = first + 1; i <= length && constant; ++i) constant = seq[i] == seq[first];
    if (constant) ++r.hits;
  }
  r = finish(std::move(r));
  r.hypotheses.push_back(compare("2^-(l-1)", std::ldexp(1.0, -static_cast<int>(l - 1)), r.hits, r.samples));
  r.hypotheses.push_back(compare("2^-l", std::ldexp(1.0, -static_cast<int>(l)), r.hits, r.samples));
  return r;
}

FrequencyReport hole_frequency_check(std::uint32_t m, std::uint64_t samples, std::uint64_t seed,
                                     std::int64_t position) {
  if (m == 0) throw Error(ErrorCode::kInvalidArgument, "m must be positive");
  if (position < 0) throw Error(ErrorCode::kInvalidArgument, "position must be nonnegative");
  const std::int64_t mm = m;
  BinarySequence x(static_cast<std::size_t>(3 * mm));
  for (std::int64_t i = 1; i <= mm; ++i) x.set(static_cast<std::size_t>(i), static_cast<int>(i % 2));
  const int c = 1 - x[static_cast<std::size_t>(mm)];
  for (std::int64_t i = mm + 1; i <= 2 * mm; ++i) x.set(static_cast<std::size_t>(i), c);
  for (std::int64_t i = 2 * mm + 1; i <= 3 * mm; ++i) {
    x.set(static_cast<std::size_t>(i), (i - 2 * mm) % 2 == 1 ? 1 - c : c);
  }
  const mazery::WallValue wall{mazery::Interval{mm, 2 * mm, mazery::Closure::kRightClosed}, 2 * mm,
                               mazery::Orientation::kVertical, mazery::WallKind::kBaseRun, true};
  const Rational slb(1, 2 * mm);
  const mazery::Interval start = mazery::Interval::closed(position, position);
  const auto y_length = static_cast<std::size_t>(position + 2 * mm * mm);

  FrequencyReport r;
  r.check = "holes";
  r.m = m;
  r.position = position;
  r.samples = samples;
  r.seed = seed;
  TrialRng rng(derive_subseed(seed, 0));
  for (std::uint64_t s = 0; s < samples; ++s) {
    const BinarySequence y = rng.sequence(y_length);
    if (mazery::find_fitting_hole(wall, start, x, y, slb, StepMax(3 * m))) ++r.hits;
  }
  r = finish(std::move(r));
  r.hypotheses.push_back(compare("1/2", 0.5, r.hits, r.samples));
  return r;
}

}  // namespace clairvoyant::experiments
