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
#include <string>
#include <vector>

namespace clairvoyant::experiments {

/// One Monte Carlo estimate of P(Y(1..L) m-embeds into X). Trial t draws X
/// then Y from a generator seeded with derive_subseed(master_seed, t).
struct TrialPlan {
  std::uint64_t master_seed = 0;
  std::uint64_t trials = 10000;
  std::uint32_t m = 1;
  std::uint64_t L = 1;
  std::uint64_t x_length = 0;  // 0 selects m * L

  std::uint64_t effective_x_length() const noexcept { return x_length ? x_length : std::uint64_t{m} * L; }
};

struct EstimateRow {
  std::uint32_t m = 1;
  std::uint64_t L = 0;
  std::uint64_t trials = 0;
  std::uint64_t successes = 0;
  double p_hat = 0;
  double ci_low = 0;
  double ci_high = 0;
  std::string rng_id;
  std::uint64_t master_seed = 0;
};

/// Throws kUnderpowered when plan.trials == 0. `threads` (0 = hardware
/// concurrency) never changes the result: trials are independent and only
/// their success count is aggregated.
EstimateRow estimate_embed_prob(const TrialPlan& plan, unsigned threads = 1);

struct Range {
  std::uint64_t first = 0;
  std::uint64_t last = 0;
};

/// One row per (m, L) in the ranges, m-major. Every row uses the template's
/// master seed, trial count and x_length rule.
std::vector<EstimateRow> sweep(Range m_range, Range l_range, const TrialPlan& plan_template, unsigned threads = 1);

inline constexpr const char* kCsvHeader = "m,L,trials,successes,p_hat,ci_low,ci_high,rng_id,master_seed";

std::string to_csv_line(const EstimateRow& row);
std::string to_json(const EstimateRow& row);
std::string rows_csv(const std::vector<EstimateRow>& rows);

}  // namespace clairvoyant::experiments
