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

// Command-line front end. Talks to the library only through the C API.
//
// Exit codes: 0 success or a positive answer, 1 a legitimate negative answer,
// 2 usage or input errors.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "clairvoyant/clairvoyant.h"

namespace {

constexpr int kExitTrue = 0;
constexpr int kExitFalse = 1;
constexpr int kExitUsage = 2;
constexpr const char* kSeedEnv = "CLAIRVOYANT_SEED";

/// Raised for anything that should end the run with exit status 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SequenceDeleter {
  void operator()(cemb_sequence* s) const { cemb_sequence_destroy(s); }
};
struct PathDeleter {
  void operator()(cemb_path* p) const { cemb_path_destroy(p); }
};
using SequencePtr = std::unique_ptr<cemb_sequence, SequenceDeleter>;
using PathPtr = std::unique_ptr<cemb_path, PathDeleter>;

/// Takes ownership of a library string.
std::string take(char* s) {
  std::string out = s ? s : "";
  cemb_string_free(s);
  return out;
}

void check(cemb_status status, const std::string& context) {
  if (status == CEMB_OK) return;
  std::string message = context + ": " + cemb_status_name(status) + ": " + cemb_last_error();
  if (status == CEMB_ERR_PARSE) message += " (byte offset " + std::to_string(cemb_last_error_offset()) + ")";
  throw UsageError(message);
}

SequencePtr load_sequence(const std::string& path) {
  cemb_sequence* seq = nullptr;
  check(cemb_sequence_load(path.c_str(), &seq), "cannot read " + path);
  return SequencePtr(seq);
}

struct InclusiveRange {
  std::uint64_t first = 0;
  std::uint64_t last = 0;
};

InclusiveRange parse_range(const std::string& text, const char* flag) {
  const auto dots = text.find("..");
  try {
    std::size_t used = 0;
    if (dots == std::string::npos) {
      const auto v = std::stoull(text, &used);
      if (used != text.size()) throw std::invalid_argument(text);
      return {v, v};
    }
    const std::string a = text.substr(0, dots);
    const std::string b = text.substr(dots + 2);
    const auto lo = std::stoull(a, &used);
    if (used != a.size()) throw std::invalid_argument(a);
    const auto hi = std::stoull(b, &used);
    if (used != b.size()) throw std::invalid_argument(b);
    if (lo > hi) throw std::invalid_argument(text);
    return {lo, hi};
  } catch (const std::logic_error&) {
    throw UsageError(std::string(flag) + " expects A..B with A <= B, got '" + text + "'");
  }
}

std::string preamble(const std::string& seed) {
  return std::string("# version=") + cemb_version() + "\n# seed=" + seed + "\n# rng_id=" + cemb_rng_id() + "\n";
}

std::string meta_json(const std::string& seed) {
  return std::string(R"({"meta":{"version":")") + cemb_version() + R"(","seed":)" + seed + R"(,"rng_id":")" +
         cemb_rng_id() + "\"}}\n";
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

/// Expands `--config FILE` (flat key=value lines) into flags placed right
/// after the subcommand name, ahead of the user's own flags. Every option
/// keeps its last value, so explicit flags win over the file.
std::vector<std::string> expand_config(const std::vector<std::string>& args,
                                       const std::vector<std::string>& subcommands) {
  std::vector<std::string> rest;
  std::optional<std::string> config;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config") {
      if (i + 1 >= args.size()) throw UsageError("--config needs a file");
      config = args[++i];
    } else if (args[i].rfind("--config=", 0) == 0) {
      config = args[i].substr(9);
    } else {
      rest.push_back(args[i]);
    }
  }
  if (!config) return rest;

  std::vector<std::string> injected;
  std::istringstream lines(read_file(*config));
  std::string line;
  int number = 0;
  while (std::getline(lines, line)) {
    ++number;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw UsageError(*config + ":" + std::to_string(number) + ": expected key=value");
    auto trim = [](std::string s) {
      const auto a = s.find_first_not_of(" \t\r");
      const auto b = s.find_last_not_of(" \t\r");
      return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
    };
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (value == "true") {
      injected.push_back("--" + key);
    } else if (value != "false") {
      injected.push_back("--" + key);
      injected.push_back(value);
    }
  }
  std::size_t pos = 0;
  while (pos < rest.size() &&
         std::find(subcommands.begin(), subcommands.end(), rest[pos]) == subcommands.end()) {
    ++pos;
  }
  if (pos == rest.size()) throw UsageError("--config needs a subcommand");
  rest.insert(rest.begin() + static_cast<std::ptrdiff_t>(pos) + 1, injected.begin(), injected.end());
  return rest;
}

struct EmbedArgs {
  std::string x, y, format = "text";
  std::uint32_t m = 0;
  std::optional<std::uint64_t> length;
  bool witness = false;
};

int run_embed(const EmbedArgs& a) {
  if (a.format != "text" && a.format != "json") throw UsageError("--format must be text or json");
  const auto x = load_sequence(a.x);
  const auto y = load_sequence(a.y);
  const std::size_t ylen = cemb_sequence_length(y.get());
  const std::size_t L = a.length ? static_cast<std::size_t>(*a.length) : ylen;
  if (L > ylen) throw UsageError("--L " + std::to_string(L) + " exceeds |Y| = " + std::to_string(ylen));

  int embeddable = 0;
  char* frontier = nullptr;
  check(cemb_embeddable(x.get(), y.get(), a.m, L, &embeddable, &frontier), "embed");
  const std::string frontier_json = take(frontier);
  std::string witness_json;
  std::vector<std::uint64_t> steps;
  if (a.witness && embeddable) {
    cemb_path* raw = nullptr;
    check(cemb_extract_embedding(x.get(), y.get(), a.m, L, &raw), "embed");
    const PathPtr path(raw);
    char* json = nullptr;
    check(cemb_path_to_json(path.get(), &json), "embed");
    witness_json = take(json);
    steps.resize(cemb_path_length(path.get()));
    cemb_path_steps(path.get(), steps.data(), steps.size());
  }

  if (a.format == "json") {
    std::cout << meta_json("null");
    std::cout << R"({"embeddable":)" << (embeddable ? "true" : "false") << R"(,"m":)" << a.m << R"(,"L":)" << L
              << R"(,"frontier":)" << frontier_json;
    if (!witness_json.empty()) std::cout << R"(,"witness":)" << witness_json;
    std::cout << "}\n";
  } else {
    std::cout << preamble("none");
    std::cout << (embeddable ? "embeddable" : "not embeddable") << "\n";
    if (a.witness && embeddable) {
      std::cout << "steps";
      for (const auto s : steps) std::cout << ' ' << s;
      std::cout << "\n";
    }
  }
  return embeddable ? kExitTrue : kExitFalse;
}

struct AnalyzeArgs {
  std::string x, y;
  std::uint32_t m = 0;
  bool holes = false, span = false;
  double delta = 0;
};

int run_analyze(const AnalyzeArgs& a) {
  if (a.holes && a.y.empty()) throw UsageError("--holes requires --y");
  const auto x = load_sequence(a.x);
  SequencePtr y;
  if (!a.y.empty()) y = load_sequence(a.y);
  const cemb_analyze_options opt{a.m, a.holes ? 1 : 0, a.span ? 1 : 0, a.delta};
  char* out = nullptr;
  check(cemb_analyze(x.get(), y.get(), &opt, &out), "analyze");
  std::cout << meta_json("null") << take(out);
  return kExitTrue;
}

struct ParamsArgs {
  std::uint32_t m = 0;
  int levels = 8;
  std::string exponents, format = "both";
};

int run_params(const ParamsArgs& a) {
  if (a.format != "csv" && a.format != "json" && a.format != "both") {
    throw UsageError("--format must be csv, json or both");
  }
  std::string text;
  if (!a.exponents.empty()) text = read_file(a.exponents);
  char* csv = nullptr;
  char* json = nullptr;
  int pass = 0;
  check(cemb_params(a.m, a.levels, a.exponents.empty() ? nullptr : text.c_str(), &csv, &json, &pass), "params");
  const std::string csv_text = take(csv);
  const std::string json_text = take(json);
  if (a.format != "json") std::cout << preamble("none") << csv_text;
  if (a.format != "csv") std::cout << meta_json("null") << json_text;
  return pass ? kExitTrue : kExitFalse;
}

struct SimulateArgs {
  std::string m_range, l_range, check_kind, format = "csv";
  std::uint64_t trials = 10000, x_length = 0;
  std::optional<std::uint64_t> seed;
  std::optional<std::uint32_t> wall_size;
  unsigned threads = 1;
};

std::uint64_t resolve_seed(const std::optional<std::uint64_t>& flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv(kSeedEnv); env != nullptr && *env != '\0') {
    try {
      std::size_t used = 0;
      const auto v = std::stoull(env, &used);
      if (used == std::string(env).size()) return v;
    } catch (const std::logic_error&) {
    }
    throw UsageError(std::string(kSeedEnv) + " is not an unsigned integer");
  }
  return 0;
}

int run_simulate(const SimulateArgs& a) {
  if (a.format != "csv" && a.format != "json") throw UsageError("--format must be csv or json");
  const cemb_format format = a.format == "json" ? CEMB_FORMAT_JSON : CEMB_FORMAT_CSV;
  const std::uint64_t seed = resolve_seed(a.seed);
  const std::string head =
      format == CEMB_FORMAT_JSON ? meta_json(std::to_string(seed)) : preamble(std::to_string(seed));
  const auto ms = parse_range(a.m_range, "--m-range");
  std::string body;
  if (a.check_kind.empty()) {
    const auto ls = parse_range(a.l_range, "--L-range");
    const cemb_simulate_options opt{ms.first, ms.last, ls.first, ls.last, a.trials,
                                    seed,     a.x_length, a.threads, format};
    char* out = nullptr;
    check(cemb_simulate(&opt, &out), "simulate");
    std::cout << head << take(out);
    return kExitTrue;
  }
  if (a.check_kind != "walls" && a.check_kind != "holes") throw UsageError("--check must be walls or holes");
  bool header_done = false;
  for (std::uint64_t m = ms.first; m <= ms.last; ++m) {
    char* out = nullptr;
    const auto m32 = static_cast<std::uint32_t>(m);
    if (a.check_kind == "walls") {
      check(cemb_wall_check(m32, a.wall_size.value_or(m32), a.trials, seed, format, &out), "simulate --check walls");
    } else {
      check(cemb_hole_check(m32, a.trials, seed, format, &out), "simulate --check holes");
    }
    std::string text = take(out);
    if (header_done && format == CEMB_FORMAT_CSV) text.erase(0, text.find('\n') + 1);
    header_done = true;
    body += text;
  }
  std::cout << head << body;
  return kExitTrue;
}

int run_selftest() {
  char* report = nullptr;
  int passed = 0;
  check(cemb_selftest(&report, &passed), "selftest");
  std::cout << preamble("none") << take(report);
  return passed ? kExitTrue : kExitFalse;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bounded-gap embedding solver, structure analyzer and simulation harness", "clairvoyant"};
  app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
  app.require_subcommand(1);
  app.set_version_flag("--version", cemb_version());

  EmbedArgs embed;
  auto* e = app.add_subcommand("embed", "Decide whether Y(1..L) m-embeds into X");
  e->add_option("--x", embed.x, "X sequence file")->required();
  e->add_option("--y", embed.y, "Y sequence file")->required();
  e->add_option("--m", embed.m, "Gap bound")->required()->check(CLI::PositiveNumber);
  e->add_option("--L", embed.length, "Prefix length (default |Y|)");
  e->add_flag("--witness", embed.witness, "Print an embedding when one exists");
  e->add_option("--format", embed.format, "text or json");

  AnalyzeArgs analyze;
  auto* an = app.add_subcommand("analyze", "Report walls, holes and spanning sequences");
  an->add_option("--x", analyze.x, "X sequence file")->required();
  an->add_option("--y", analyze.y, "Y sequence file");
  an->add_option("--m", analyze.m, "Gap bound")->required()->check(CLI::PositiveNumber);
  an->add_flag("--holes", analyze.holes, "Report the first fitting hole of every wall (needs --y)");
  an->add_flag("--span", analyze.span, "Report spanning wall sequences");
  an->add_option("--delta", analyze.delta, "External-interval threshold (default: first-level value)");

  ParamsArgs params;
  auto* pa = app.add_subcommand("params", "Level parameter table and exponent constraint report");
  pa->add_option("--m", params.m, "Gap bound")->required()->check(CLI::PositiveNumber);
  pa->add_option("--levels", params.levels, "Number of levels")->check(CLI::PositiveNumber);
  pa->add_option("--exponents", params.exponents, "key=value exponent file");
  pa->add_option("--format", params.format, "csv, json or both");

  SimulateArgs sim;
  auto* si = app.add_subcommand("simulate", "Monte Carlo embedding probabilities and frequency checks");
  si->add_option("--m-range", sim.m_range, "A..B inclusive")->required();
  si->add_option("--L-range", sim.l_range, "A..B inclusive");
  si->add_option("--trials", sim.trials, "Trials per row (samples for --check)");
  si->add_option("--seed", sim.seed, std::string("Master seed (default $") + kSeedEnv + " or 0)");
  si->add_option("--x-length", sim.x_length, "Length of X (default m*L)");
  si->add_option("--threads", sim.threads, "Worker threads (0 = all cores); never changes the output");
  si->add_option("--check", sim.check_kind, "walls or holes");
  si->add_option("--wall-size", sim.wall_size, "Wall size l for --check walls (default m)");
  si->add_option("--format", sim.format, "csv or json");

  auto* st = app.add_subcommand("selftest", "Run built-in consistency checks");

  const std::vector<std::string> names{"embed", "analyze", "params", "simulate", "selftest"};
  try {
    std::vector<std::string> args(argv + 1, argv + argc);
    args = expand_config(args, names);
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::ParseError& err) {
    const int code = app.exit(err);
    return code == 0 ? kExitTrue : kExitUsage;
  } catch (const UsageError& err) {
    std::cerr << "error: " << err.what() << "\n";
    return kExitUsage;
  }

  try {
    if (e->parsed()) return run_embed(embed);
    if (an->parsed()) return run_analyze(analyze);
    if (pa->parsed()) return run_params(params);
    if (si->parsed()) {
      if (sim.check_kind.empty() && sim.l_range.empty()) throw UsageError("simulate needs --L-range or --check");
      return run_simulate(sim);
    }
    if (st->parsed()) return run_selftest();
  } catch (const UsageError& err) {
    std::cout.flush();
    std::cerr << "error: " << err.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
