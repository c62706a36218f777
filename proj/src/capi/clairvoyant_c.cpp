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

#include "clairvoyant/clairvoyant.h"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <exception>
#include <new>
#include <string>
#include <string_view>

#include <fmt/format.h>

#include "clairvoyant/core/embedding.hpp"
#include "clairvoyant/core/errors.hpp"
#include "clairvoyant/core/rng.hpp"
#include "clairvoyant/core/sequence.hpp"
#include "clairvoyant/experiments/estimate.hpp"
#include "clairvoyant/experiments/reports.hpp"
#include "clairvoyant/mazery/holes.hpp"
#include "clairvoyant/mazery/walls.hpp"
#include "clairvoyant/scaleup/exponents.hpp"
#include "clairvoyant/scaleup/params.hpp"

struct cemb_sequence {
  clairvoyant::BinarySequence seq;
};

struct cemb_path {
  clairvoyant::EmbeddingPath path;
};

namespace {

using clairvoyant::ErrorCode;

thread_local std::string g_last_error;
thread_local std::size_t g_last_offset = 0;

cemb_status to_status(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument:
      return CEMB_ERR_INVALID_ARGUMENT;
    case ErrorCode::kParse:
      return CEMB_ERR_PARSE;
    case ErrorCode::kInputBounds:
      return CEMB_ERR_BOUNDS;
    case ErrorCode::kCompositionDomain:
      return CEMB_ERR_COMPOSITION_DOMAIN;
    case ErrorCode::kOracleSize:
      return CEMB_ERR_ORACLE_SIZE;
    case ErrorCode::kStructure:
      return CEMB_ERR_STRUCTURE;
    case ErrorCode::kUnderpowered:
      return CEMB_ERR_UNDERPOWERED;
    case ErrorCode::kConstraint:
      return CEMB_ERR_CONSTRAINT;
    case ErrorCode::kIo:
      return CEMB_ERR_IO;
  }
  return CEMB_ERR_INTERNAL;
}

cemb_status fail(cemb_status status, const std::string& message) {
  g_last_error = message;
  return status;
}

/// Runs `body`, translating exceptions into status codes.
template <typename F>
cemb_status guarded(F&& body) {
  g_last_error.clear();
  g_last_offset = 0;
  try {
    body();
    return CEMB_OK;
  } catch (const clairvoyant::ParseError& e) {
    g_last_offset = e.offset();
    return fail(CEMB_ERR_PARSE, e.what());
  } catch (const clairvoyant::Error& e) {
    return fail(to_status(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(CEMB_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(CEMB_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(CEMB_ERR_INTERNAL, "unknown failure");
  }
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.data(), s.size() + 1);
  return out;
}

void require(bool condition, const char* what) {
  if (!condition) throw clairvoyant::Error(ErrorCode::kInvalidArgument, what);
}

/// Escapes an error message for use inside a JSON string literal.
std::string json_escape(std::string_view text) {
  std::string out;
  for (const char c : text) {
    if (c == '"' || c == '\\') {
      out += '\\';
      out += c;
    } else if (static_cast<unsigned char>(c) < 0x20) {
      out += fmt::format("\\u{:04x}", static_cast<int>(c));
    } else {
      out += c;
    }
  }
  return out;
}

void require_format(cemb_format format) {
  require(format == CEMB_FORMAT_CSV || format == CEMB_FORMAT_JSON, "unknown output format");
}

std::string analyze_report(const clairvoyant::BinarySequence& x, const clairvoyant::BinarySequence* y,
                           const cemb_analyze_options& opt) {
  namespace mz = clairvoyant::mazery;
  const auto m = opt.m;
  std::string out;
  const auto walls_x = mz::find_walls(x, m, mz::Orientation::kVertical);
  std::vector<mz::WallValue> walls_y;
  if (y != nullptr) walls_y = mz::find_walls(*y, m, mz::Orientation::kHorizontal);
  for (const auto& w : walls_x) out += w.to_json() + "\n";
  for (const auto& w : walls_y) out += w.to_json() + "\n";

  if (opt.holes) {
    const clairvoyant::Rational slb(1, 2 * static_cast<std::int64_t>(m));
    const clairvoyant::StepMax step(3 * m);
    auto emit = [&](const mz::WallValue& w, std::size_t through_length) {
      if (through_length == 0) return;
      const auto starts = mz::Interval::closed(0, static_cast<std::int64_t>(through_length) - 1);
      if (const auto hole = mz::find_fitting_hole(w, starts, x, *y, slb, step)) out += hole->to_json() + "\n";
    };
    for (const auto& w : walls_x) emit(w, y->length());
    for (const auto& w : walls_y) emit(w, x.length());
  }

  if (opt.span) {
    const double delta =
        opt.delta > 0 ? opt.delta
                      : static_cast<double>(
                            clairvoyant::scaleup::base_params(m, clairvoyant::scaleup::ExponentTuple::reference())
                                .Delta());
    auto spans = [&](const clairvoyant::BinarySequence& seq, const std::vector<mz::WallValue>& walls,
                     mz::Orientation o) {
      for (const auto& region : mz::spanned_regions(walls, static_cast<std::int64_t>(seq.length()), delta)) {
        const std::string head = fmt::format(R"({{"span":{{"orientation":"{}","left":{},"right":{}}})",
                                             mz::to_string(o), region.left, region.right);
        try {
          std::string list;
          for (const auto& w : mz::spanning_sequence(region, walls, seq, m, delta, o)) {
            list += (list.empty() ? "" : ",") + w.to_json();
          }
          out += head + ",\"walls\":[" + list + "]}\n";
        } catch (const clairvoyant::Error& e) {
          out += head + fmt::format(",\"error\":\"{}\"}}\n", json_escape(e.what()));
        }
      }
    };
    spans(x, walls_x, mz::Orientation::kVertical);
    if (y != nullptr) spans(*y, walls_y, mz::Orientation::kHorizontal);
  }
  return out;
}

std::string selftest_report(bool& passed) {
  using namespace clairvoyant;
  std::string out;
  passed = true;
  auto line = [&](const char* name, bool ok) {
    out += fmt::format("{} {}\n", ok ? "PASS" : "FAIL", name);
    passed = passed && ok;
  };

  bool oracle_ok = true;
  for (unsigned xb = 0; xb < 64 && oracle_ok; ++xb) {
    for (unsigned yb = 0; yb < 8 && oracle_ok; ++yb) {
      BinarySequence x(6);
      BinarySequence y(3);
      for (unsigned i = 0; i < 6; ++i) x.set(i + 1, static_cast<int>((xb >> i) & 1U));
      for (unsigned i = 0; i < 3; ++i) y.set(i + 1, static_cast<int>((yb >> i) & 1U));
      const auto rows = all_frontiers(x, y, StepMax(2), 3);
      const auto brute = brute_force_reachable(x, y, 2, 3);
      for (std::size_t j = 0; j <= 3; ++j) oracle_ok = oracle_ok && rows[j].list() == brute[j];
    }
  }
  line("frontier DP equals exhaustive DFS (|X|=6, |Y|=3, m=2)", oracle_ok);

  const auto frontier = all_frontiers(BinarySequence::from_string("0110100110"), BinarySequence::from_string("1"),
                                      StepMax(3), 1);
  line("single frontier step", frontier[1].list() == std::vector<std::size_t>{2, 3});

  const auto composed = compose_embeddings(EmbeddingPath{{2, 4}, 2}, EmbeddingPath{{1, 2, 4, 5}, 2});
  line("embedding composition", composed.steps == std::vector<std::size_t>{2, 5} && composed.gap_bound == 4);

  line("reference exponents satisfy every constraint",
       scaleup::verify_exponents(scaleup::ExponentTuple::reference()).pass());

  experiments::TrialPlan plan;
  plan.master_seed = 7;
  plan.trials = 200;
  plan.m = 2;
  plan.L = 16;
  const auto a = experiments::estimate_embed_prob(plan, 1);
  const auto b = experiments::estimate_embed_prob(plan, 4);
  line("estimates independent of thread count", experiments::to_csv_line(a) == experiments::to_csv_line(b));
  return out;
}

}  // namespace

extern "C" {

const char* cemb_version(void) { return CEMB_VERSION_STRING; }

const char* cemb_rng_id(void) { return clairvoyant::kRngId; }

const char* cemb_status_name(cemb_status status) {
  switch (status) {
    case CEMB_OK:
      return "ok";
    case CEMB_ERR_INVALID_ARGUMENT:
      return "invalid-argument";
    case CEMB_ERR_PARSE:
      return "parse";
    case CEMB_ERR_BOUNDS:
      return "input-bounds";
    case CEMB_ERR_COMPOSITION_DOMAIN:
      return "composition-domain";
    case CEMB_ERR_ORACLE_SIZE:
      return "oracle-size";
    case CEMB_ERR_STRUCTURE:
      return "structure";
    case CEMB_ERR_UNDERPOWERED:
      return "estimator-underpowered";
    case CEMB_ERR_CONSTRAINT:
      return "constraint";
    case CEMB_ERR_IO:
      return "io";
    case CEMB_ERR_INTERNAL:
      return "internal";
  }
  return "unknown";
}

const char* cemb_last_error(void) { return g_last_error.c_str(); }

size_t cemb_last_error_offset(void) { return g_last_offset; }

void cemb_string_free(char* s) { std::free(s); }

cemb_status cemb_sequence_parse(const char* bytes, size_t length, cemb_sequence** out) {
  return guarded([&] {
    require(out != nullptr && (bytes != nullptr || length == 0), "null argument");
    *out = nullptr;
    auto seq = clairvoyant::BinarySequence::parse_file_contents(std::string_view(bytes ? bytes : "", length));
    *out = new cemb_sequence{std::move(seq)};
  });
}

cemb_status cemb_sequence_load(const char* path, cemb_sequence** out) {
  return guarded([&] {
    require(out != nullptr && path != nullptr, "null argument");
    *out = nullptr;
    *out = new cemb_sequence{clairvoyant::BinarySequence::load(path)};
  });
}

size_t cemb_sequence_length(const cemb_sequence* seq) { return seq ? seq->seq.length() : 0; }

void cemb_sequence_destroy(cemb_sequence* seq) { delete seq; }

cemb_status cemb_path_create(const uint64_t* steps, size_t count, uint32_t gap_bound, cemb_path** out) {
  return guarded([&] {
    require(out != nullptr && (steps != nullptr || count == 0), "null argument");
    require(gap_bound >= 1, "gap bound must be positive");
    *out = nullptr;
    clairvoyant::EmbeddingPath p;
    p.gap_bound = gap_bound;
    p.steps.assign(steps, steps + count);
    *out = new cemb_path{std::move(p)};
  });
}

size_t cemb_path_length(const cemb_path* path) { return path ? path->path.length() : 0; }

size_t cemb_path_steps(const cemb_path* path, uint64_t* steps, size_t capacity) {
  if (path == nullptr || steps == nullptr) return 0;
  const size_t n = std::min(capacity, path->path.steps.size());
  for (size_t i = 0; i < n; ++i) steps[i] = path->path.steps[i];
  return n;
}

uint32_t cemb_path_gap_bound(const cemb_path* path) { return path ? path->path.gap_bound : 0; }

cemb_status cemb_path_to_json(const cemb_path* path, char** out_json) {
  return guarded([&] {
    require(path != nullptr && out_json != nullptr, "null argument");
    *out_json = dup_string(path->path.to_json());
  });
}

void cemb_path_destroy(cemb_path* path) { delete path; }

cemb_status cemb_embeddable(const cemb_sequence* x, const cemb_sequence* y, uint32_t m, size_t L,
                            int* out_embeddable, char** out_frontier_json) {
  return guarded([&] {
    require(x != nullptr && y != nullptr && out_embeddable != nullptr, "null argument");
    require(m >= 1, "m must be positive");
    const auto result = clairvoyant::embeddable_prefix(x->seq, y->seq, m, L);
    *out_embeddable = result.embeddable ? 1 : 0;
    if (out_frontier_json != nullptr) *out_frontier_json = dup_string(result.frontier.to_json());
  });
}

cemb_status cemb_extract_embedding(const cemb_sequence* x, const cemb_sequence* y, uint32_t m, size_t L,
                                   cemb_path** out) {
  return guarded([&] {
    require(x != nullptr && y != nullptr && out != nullptr, "null argument");
    require(m >= 1, "m must be positive");
    *out = nullptr;
    if (auto path = clairvoyant::extract_embedding(x->seq, y->seq, m, L)) *out = new cemb_path{std::move(*path)};
  });
}

cemb_status cemb_check_embedding(const cemb_sequence* x, const cemb_sequence* y, const cemb_path* path,
                                 int* out_valid) {
  return guarded([&] {
    require(x != nullptr && y != nullptr && path != nullptr && out_valid != nullptr, "null argument");
    *out_valid = clairvoyant::check_embedding(x->seq, y->seq, path->path) ? 1 : 0;
  });
}

cemb_status cemb_compose_embeddings(const cemb_path* p1, const cemb_path* p2, cemb_path** out) {
  return guarded([&] {
    require(p1 != nullptr && p2 != nullptr && out != nullptr, "null argument");
    *out = nullptr;
    *out = new cemb_path{clairvoyant::compose_embeddings(p1->path, p2->path)};
  });
}

cemb_status cemb_analyze(const cemb_sequence* x, const cemb_sequence* y, const cemb_analyze_options* options,
                         char** out_jsonl) {
  return guarded([&] {
    require(x != nullptr && options != nullptr && out_jsonl != nullptr, "null argument");
    require(options->m >= 1, "m must be positive");
    require(!options->holes || y != nullptr, "hole analysis needs a Y sequence");
    *out_jsonl = dup_string(analyze_report(x->seq, y ? &y->seq : nullptr, *options));
  });
}

cemb_status cemb_params(uint32_t m, int levels, const char* exponents_text, char** out_csv,
                        char** out_constraints_jsonl, int* out_all_pass) {
  return guarded([&] {
    namespace su = clairvoyant::scaleup;
    require(out_csv != nullptr && out_constraints_jsonl != nullptr && out_all_pass != nullptr, "null argument");
    require(m >= 1 && levels >= 1, "m and levels must be positive");
    const su::ExponentTuple e =
        exponents_text ? su::ExponentTuple::parse(exponents_text) : su::ExponentTuple::reference();
    const auto report = su::verify_exponents(e);
    *out_all_pass = report.pass() ? 1 : 0;
    std::string csv = "level,R,T,Δ,Γ,Φ,Ψ,w,qtri,qinv,sigx,sigy\n";
    std::string jsonl = report.to_jsonl();
    if (report.pass()) {
      const auto table = su::level_table(e, su::base_params(m, e), levels);
      csv = table.to_csv();
      jsonl += table.checks_jsonl();
    }
    *out_csv = dup_string(csv);
    *out_constraints_jsonl = dup_string(jsonl);
  });
}

cemb_status cemb_simulate(const cemb_simulate_options* options, char** out) {
  return guarded([&] {
    namespace ex = clairvoyant::experiments;
    require(options != nullptr && out != nullptr, "null argument");
    require_format(options->format);
    ex::TrialPlan plan;
    plan.master_seed = options->seed;
    plan.trials = options->trials;
    plan.x_length = options->x_length;
    const auto rows = ex::sweep({options->m_first, options->m_last}, {options->l_first, options->l_last}, plan,
                                options->threads);
    if (options->format == CEMB_FORMAT_CSV) {
      *out = dup_string(ex::rows_csv(rows));
    } else {
      std::string text;
      for (const auto& row : rows) text += ex::to_json(row) + "\n";
      *out = dup_string(text);
    }
  });
}

cemb_status cemb_wall_check(uint32_t m, uint32_t l, uint64_t samples, uint64_t seed, cemb_format format,
                            char** out) {
  return guarded([&] {
    require(out != nullptr, "null argument");
    require_format(format);
    const auto report = clairvoyant::experiments::wall_frequency_check(m, l, samples, seed);
    *out = dup_string(format == CEMB_FORMAT_CSV ? report.to_csv() : report.to_json() + "\n");
  });
}

cemb_status cemb_hole_check(uint32_t m, uint64_t samples, uint64_t seed, cemb_format format, char** out) {
  return guarded([&] {
    require(out != nullptr, "null argument");
    require_format(format);
    const auto report = clairvoyant::experiments::hole_frequency_check(m, samples, seed);
    *out = dup_string(format == CEMB_FORMAT_CSV ? report.to_csv() : report.to_json() + "\n");
  });
}

cemb_status cemb_selftest(char** out_report, int* out_passed) {
  return guarded([&] {
    require(out_report != nullptr && out_passed != nullptr, "null argument");
    bool passed = false;
    *out_report = dup_string(selftest_report(passed));
    *out_passed = passed ? 1 : 0;
  });
}

}  // extern "C"
