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

#include <cstdlib>
#include <memory>
#include <string>

#include "clairvoyant/clairvoyant.h"

namespace {

struct SeqDeleter {
  void operator()(cemb_sequence* s) const { cemb_sequence_destroy(s); }
};
struct PathDeleter {
  void operator()(cemb_path* p) const { cemb_path_destroy(p); }
};
using Seq = std::unique_ptr<cemb_sequence, SeqDeleter>;
using Path = std::unique_ptr<cemb_path, PathDeleter>;

Seq parse(const std::string& text) {
  cemb_sequence* s = nullptr;
  EXPECT_EQ(cemb_sequence_parse(text.data(), text.size(), &s), CEMB_OK);
  return Seq(s);
}

std::string take(char* s) {
  std::string out = s ? s : "";
  cemb_string_free(s);
  return out;
}

TEST(CApi, Metadata) {
  EXPECT_STRNE(cemb_version(), "");
  EXPECT_STREQ(cemb_rng_id(), "splitmix64-subseed/mt19937_64/v1");
  EXPECT_STREQ(cemb_status_name(CEMB_ERR_PARSE), "parse");
}

TEST(CApi, ParseErrorCarriesOffset) {
  cemb_sequence* s = nullptr;
  EXPECT_EQ(cemb_sequence_parse("01a", 3, &s), CEMB_ERR_PARSE);
  EXPECT_EQ(s, nullptr);
  EXPECT_EQ(cemb_last_error_offset(), 2U);
  EXPECT_NE(std::string(cemb_last_error()).find("2"), std::string::npos);
  EXPECT_EQ(cemb_sequence_load("/no/such/file", &s), CEMB_ERR_IO);
}

TEST(CApi, NullArgumentsAreRejected) {
  int flag = 0;
  EXPECT_EQ(cemb_embeddable(nullptr, nullptr, 1, 0, &flag, nullptr), CEMB_ERR_INVALID_ARGUMENT);
  EXPECT_EQ(cemb_sequence_parse(nullptr, 0, nullptr), CEMB_ERR_INVALID_ARGUMENT);
}

TEST(CApi, EmbedAndWitness) {
  const auto x = parse("10");
  const auto y = parse("1");
  int ok = 0;
  char* frontier = nullptr;
  ASSERT_EQ(cemb_embeddable(x.get(), y.get(), 2, 1, &ok, &frontier), CEMB_OK);
  EXPECT_EQ(ok, 1);
  EXPECT_EQ(take(frontier), R"({"row":1,"positions":[1]})");
  cemb_path* raw = nullptr;
  ASSERT_EQ(cemb_extract_embedding(x.get(), y.get(), 2, 1, &raw), CEMB_OK);
  Path path(raw);
  ASSERT_NE(path, nullptr);
  std::uint64_t steps[4] = {};
  EXPECT_EQ(cemb_path_steps(path.get(), steps, 4), 1U);
  EXPECT_EQ(steps[0], 1U);
  int valid = 0;
  EXPECT_EQ(cemb_check_embedding(x.get(), y.get(), path.get(), &valid), CEMB_OK);
  EXPECT_EQ(valid, 1);
  char* json = nullptr;
  ASSERT_EQ(cemb_path_to_json(path.get(), &json), CEMB_OK);
  EXPECT_EQ(take(json), R"({"m":2,"steps":[1]})");
}

TEST(CApi, NotEmbeddableAndBounds) {
  const auto x = parse("000000");
  const auto y = parse("1");
  int ok = 1;
  ASSERT_EQ(cemb_embeddable(x.get(), y.get(), 3, 1, &ok, nullptr), CEMB_OK);
  EXPECT_EQ(ok, 0);
  cemb_path* raw = reinterpret_cast<cemb_path*>(1);
  ASSERT_EQ(cemb_extract_embedding(x.get(), y.get(), 3, 1, &raw), CEMB_OK);
  EXPECT_EQ(raw, nullptr);
  EXPECT_EQ(cemb_embeddable(x.get(), y.get(), 3, 2, &ok, nullptr), CEMB_ERR_BOUNDS);
}

TEST(CApi, Compose) {
  const std::uint64_t s1[] = {2, 4};
  const std::uint64_t s2[] = {1, 2, 4, 5};
  cemb_path* p1 = nullptr;
  cemb_path* p2 = nullptr;
  ASSERT_EQ(cemb_path_create(s1, 2, 2, &p1), CEMB_OK);
  ASSERT_EQ(cemb_path_create(s2, 4, 2, &p2), CEMB_OK);
  Path a(p1), b(p2);
  cemb_path* raw = nullptr;
  ASSERT_EQ(cemb_compose_embeddings(a.get(), b.get(), &raw), CEMB_OK);
  Path c(raw);
  EXPECT_EQ(cemb_path_gap_bound(c.get()), 4U);
  std::uint64_t steps[2] = {};
  cemb_path_steps(c.get(), steps, 2);
  EXPECT_EQ(steps[0], 2U);
  EXPECT_EQ(steps[1], 5U);
  const std::uint64_t s3[] = {1, 9};
  cemb_path* p3 = nullptr;
  ASSERT_EQ(cemb_path_create(s3, 2, 2, &p3), CEMB_OK);
  Path d(p3);
  EXPECT_EQ(cemb_compose_embeddings(d.get(), b.get(), &raw), CEMB_ERR_COMPOSITION_DOMAIN);
}

TEST(CApi, AnalyzeAlternatingHasNoWalls) {
  const auto x = parse("0101010101");
  cemb_analyze_options opt{2, 0, 0, 0};
  char* out = nullptr;
  ASSERT_EQ(cemb_analyze(x.get(), nullptr, &opt, &out), CEMB_OK);
  EXPECT_EQ(take(out), "");
  opt.holes = 1;
  EXPECT_EQ(cemb_analyze(x.get(), nullptr, &opt, &out), CEMB_ERR_INVALID_ARGUMENT);
}

TEST(CApi, ParamsReport) {
  char* csv = nullptr;
  char* jsonl = nullptr;
  int pass = 0;
  ASSERT_EQ(cemb_params(10, 3, nullptr, &csv, &jsonl, &pass), CEMB_OK);
  EXPECT_EQ(pass, 1);
  EXPECT_EQ(take(csv).rfind("level,R,", 0), 0U);
  EXPECT_NE(take(jsonl).find("\"constraint\":\"rank_growth\""), std::string::npos);
  ASSERT_EQ(cemb_params(10, 3, "tau=2\n", &csv, &jsonl, &pass), CEMB_OK);
  EXPECT_EQ(pass, 0);
  take(csv);
  take(jsonl);
  EXPECT_EQ(cemb_params(10, 3, "bogus=1\n", &csv, &jsonl, &pass), CEMB_ERR_PARSE);
}

TEST(CApi, SimulateIsThreadIndependent) {
  cemb_simulate_options opt{1, 3, 4, 6, 500, 17, 0, 1, CEMB_FORMAT_CSV};
  char* a = nullptr;
  ASSERT_EQ(cemb_simulate(&opt, &a), CEMB_OK);
  opt.threads = 4;
  char* b = nullptr;
  ASSERT_EQ(cemb_simulate(&opt, &b), CEMB_OK);
  EXPECT_EQ(take(a), take(b));
  opt.trials = 0;
  EXPECT_EQ(cemb_simulate(&opt, &a), CEMB_ERR_UNDERPOWERED);
}

TEST(CApi, SelfTestPasses) {
  char* report = nullptr;
  int passed = 0;
  ASSERT_EQ(cemb_selftest(&report, &passed), CEMB_OK);
  EXPECT_EQ(passed, 1);
  EXPECT_EQ(take(report).find("FAIL"), std::string::npos);
}

}  // namespace
