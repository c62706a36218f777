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

#include "clairvoyant/experiments/estimate.hpp"

#include <algorithm>
#include <thread>

#include <fmt/format.h>

#include "clairvoyant/core/embedding.hpp"
#include "clairvoyant/core/errors.hpp"
#include "clairvoyant/core/rng.hpp"
#include "clairvoyant/core/stats.hpp"

namespace clairvoyant::experiments {

namespace {

bool run_trial(const TrialPlan& plan, std::uint64_t t) {
  TrialRng rng(derive_subseed(plan.master_seed, t));
  const BinarySequence x = rng.sequence(plan.effective_x_length());
  const BinarySequence y = rng.sequence(plan.L);
  return embeddable_prefix(x, y, plan.m, plan.L).embeddable;
}

}  // namespace

EstimateRow estimate_embed_prob(const TrialPlan& plan, unsigned threads) {
  if (plan.trials == 0) throw Error(ErrorCode::kUnderpowered, "a plan needs at least one trial");
  if (plan.m == 0) throw Error(ErrorCode::kInvalidArgument, "m must be positive");
  if (threads == 0) threads = std::max(1U, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, plan.trials));

  std::vector<std::uint64_t> counts(threads, 0);
  auto worker = [&](unsigned k) {
    std::uint64_t local = 0;
    for (std::uint64_t t = k; t < plan.trials; t += threads) local += run_trial(plan, t) ? 1 : 0;
    counts[k] = local;
  };
  if (threads == 1) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (unsigned k = 0; k < threads; ++k) pool.emplace_back(worker, k);
    for (auto& th : pool) th.join();
  }
  std::uint64_t successes = 0;
  for (const auto c : counts) successes += c;

  const auto ci = wilson_interval(successes, plan.trials);
  return EstimateRow{plan.m,
                     plan.L,
                     plan.trials,
                     successes,
                     static_cast<double>(successes) / static_cast<double>(plan.trials),
                     ci.low,
                     ci.high,
                     kRngId,
                     plan.master_seed};
}

std::vector<EstimateRow> sweep(Range m_range, Range l_range, const TrialPlan& plan_template, unsigned threads) {
  if (m_range.first > m_range.last || l_range.first > l_range.last) {
    throw Error(ErrorCode::kInvalidArgument, "sweep ranges must be nonempty");
  }
  if (m_range.first == 0) throw Error(ErrorCode::kInvalidArgument, "m must be positive");
  std::vector<EstimateRow> rows;
  for (std::uint64_t m = m_range.first; m <= m_range.last; ++m) {
    for (std::uint64_t l = l_range.first; l <= l_range.last; ++l) {
      TrialPlan plan = plan_template;
      plan.m = static_cast<std::uint32_t>(m);
      plan.L = l;
      rows.push_back(estimate_embed_prob(plan, threads));
    }
  }
  return rows;
}

std::string to_csv_line(const EstimateRow& r) {
  return fmt::format("{},{},{},{},{:.9g},{:.9g},{:.9g},{},{}", r.m, r.L, r.trials, r.successes, r.p_hat, r.ci_low,
                     r.ci_high, r.rng_id, r.master_seed);
}

std::string to_json(const EstimateRow& r) {
  return fmt::format(
      R"({{"m":{},"L":{},"trials":{},"successes":{},"p_hat":{:.9g},"ci_low":{:.9g},"ci_high":{:.9g},"rng_id":"{}","master_seed":{}}})",
      r.m, r.L, r.trials, r.successes, r.p_hat, r.ci_low, r.ci_high, r.rng_id, r.master_seed);
}

std::string rows_csv(const std::vector<EstimateRow>& rows) {
  std::string out = std::string(kCsvHeader) + "\n";
  for (const auto& r : rows) out += to_csv_line(r) + "\n";
  return out;
}

}  // namespace clairvoyant::experiments
