/*
   Copyright 2026 The ratcode Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "ratcode/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "ratcode/bounds.hpp"
#include "ratcode/code.hpp"
#include "ratcode/distance.hpp"
#include "ratcode/error.hpp"
#include "ratcode/serialize.hpp"
#include "ratcode/verify.hpp"

namespace ratcode::cli {

namespace {

struct RunConfig {
  std::uint64_t q = 0;
  std::uint32_t p = 0;
  std::uint32_t k = 0;
  std::string modulus;
  int m = 1;
  std::string mode = "exact";
  std::uint64_t budget = 1'000'000;
  std::uint64_t seed = 0;
  unsigned workers = 1;
  std::optional<std::uint64_t> max_words;
  std::optional<std::uint64_t> max_pairs;
  std::string output;
  std::string format = "json";
  bool timings = false;
  // enumerate
  bool oracle = false;
  // compare
  bool all = false;
  bool no_measure = false;
  // decode
  std::vector<std::string> words;
  std::string input;
  std::string code_file;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::vector<std::uint32_t> parse_modulus(const std::string& text) {
  std::vector<std::uint32_t> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      out.push_back(static_cast<std::uint32_t>(std::stoul(tok)));
    } catch (const std::exception&) {
      throw UsageError("--modulus: bad coefficient '" + tok + "'");
    }
  }
  return out;
}

FieldPtr resolve_field(const RunConfig& cfg) {
  std::uint32_t p = cfg.p;
  std::uint32_t k = cfg.k;
  if (cfg.q != 0) {
    auto pk = prime_power(cfg.q);
    if (!pk) throw UsageError("--q " + std::to_string(cfg.q) + " is not a prime power");
    if ((p != 0 && p != pk->first) || (k != 0 && k != pk->second)) {
      throw UsageError("--q disagrees with --p/--k");
    }
    p = pk->first;
    k = pk->second;
  }
  if (p == 0) throw UsageError("a field is required: give --q or --p (and --k)");
  if (k == 0) k = 1;
  std::optional<std::vector<std::uint32_t>> mod;
  if (!cfg.modulus.empty()) mod = parse_modulus(cfg.modulus);
  try {
    return Field::make(p, k, mod);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

Limits resolve_limits(const RunConfig& cfg) {
  Limits l = Limits::from_env();
  if (cfg.max_words) l.max_words = *cfg.max_words;
  if (cfg.max_pairs) l.max_pairs = *cfg.max_pairs;
  return l;
}

CodeParams resolve_params(const RunConfig& cfg) {
  CodeParams params{resolve_field(cfg), cfg.m};
  try {
    params.validate();
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  return params;
}

void emit(const RunConfig& cfg, std::ostream& out, const std::string& text) {
  if (cfg.output.empty()) {
    out << text;
    return;
  }
  std::ofstream f(cfg.output, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open " + cfg.output + " for writing");
  f << text;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

void formula_summary(const CodeParams& params, std::ostream& err) {
  const auto q = params.q();
  const auto m = static_cast<std::uint64_t>(params.m);
  err << "formula-only: n=" << q + 1 << " claimed_M=" << claimed_code_size(q, m) << " claimed_d=" << q + 1 - 2 * m
      << " claimed_functions=" << claimed_function_count(q, m) << "\n";
}

// ---------------------------------------------------------------- commands

int cmd_construct(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const CodeParams params = resolve_params(cfg);
  const Limits limits = resolve_limits(cfg);
  try {
    const Code code = construct_code(params, limits);
    emit(cfg, out, cfg.format == "csv" ? code_to_csv(code) : dump(code_to_json(code)));
    const auto q = params.q();
    const auto m = static_cast<std::uint64_t>(params.m);
    err << "n=" << code.n() << " M_measured=" << code.size() << " M_claimed=" << claimed_code_size(q, m)
        << (BigInt(code.size()) == claimed_code_size(q, m) ? " (match)" : " (mismatch)")
        << " injective=" << (code.injective() ? "yes" : "no") << "\n";
    return kOk;
  } catch (const ResourceLimit& e) {
    err << "resource guard: " << e.what() << "\n";
    formula_summary(params, err);
    return kResourceGuard;
  }
}

int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const CodeParams params = resolve_params(cfg);
  VerifyOptions opts;
  if (cfg.mode == "exact") opts.mode = DistanceMode::Exact;
  else if (cfg.mode == "sampled") opts.mode = DistanceMode::Sampled;
  else throw UsageError("--mode must be exact or sampled");
  if (cfg.budget < 1) throw UsageError("--budget must be >= 1");
  opts.budget = cfg.budget;
  opts.seed = cfg.seed;
  opts.workers = cfg.workers;
  opts.limits = resolve_limits(cfg);
  try {
    const VerifyReport r = verify_code(params, opts);
    emit(cfg, out, dump(report_to_json(r, cfg.timings)));
    err << "n=" << r.n << " M=" << r.measured_size << " d=" << r.measured_d << " (" << cfg.mode
        << ") lower_bound=" << r.claimed_d << " discrepancies=" << r.discrepancies.size()
        << " invariants=" << (r.invariants_hold() ? "hold" : "VIOLATED") << "\n";
    return r.invariants_hold() ? kOk : kInvariantViolation;
  } catch (const ResourceLimit& e) {
    err << "resource guard: " << e.what() << "\n";
    formula_summary(params, err);
    return kResourceGuard;
  }
}

int cmd_table(const RunConfig& cfg, std::ostream& out, std::ostream&) {
  if (cfg.format == "csv") {
    std::ostringstream os;
    os << "q,m,n,M_claimed,d_claimed,M_formula,d_formula,matches\n";
    for (const auto& row : table_claims()) {
      const BigInt formula = claimed_code_size(row.q, row.m);
      const auto d = row.q + 1 - 2 * row.m;
      os << row.q << ',' << row.m << ',' << row.n << ',' << row.size << ',' << row.d << ',' << formula << ','
         << d << ',' << ((formula == row.size && d == row.d && row.n == row.q + 1) ? "true" : "false") << '\n';
    }
    emit(cfg, out, os.str());
    return kOk;
  }
  Json rows = Json::array();
  for (const auto& row : table_claims()) {
    const BigInt formula = claimed_code_size(row.q, row.m);
    const auto d = row.q + 1 - 2 * row.m;
    rows.push_back({{"q", row.q},
                    {"m", row.m},
                    {"n", row.n},
                    {"M_claimed", row.size.str()},
                    {"d_claimed", row.d},
                    {"M_formula", formula.str()},
                    {"d_formula", d},
                    {"matches", formula == row.size && d == row.d && row.n == row.q + 1}});
  }
  emit(cfg, out, dump(Json{{"schema", kSchemaVersion}, {"table", rows}}));
  return kOk;
}

int cmd_claims(const RunConfig& cfg, std::ostream& out, std::ostream&) {
  if (cfg.format == "csv") {
    emit(cfg, out, claims_csv());
    return kOk;
  }
  Json rows = Json::array();
  for (const auto& row : table_claims()) {
    rows.push_back({{"q", row.q},
                    {"m", row.m},
                    {"n", row.n},
                    {"M_claimed", row.size.str()},
                    {"d_claimed", row.d},
                    {"source", row.source}});
  }
  emit(cfg, out, dump(Json{{"schema", kSchemaVersion}, {"claims", rows}}));
  return kOk;
}

ComparisonRow compare_one(std::uint64_t q, std::uint64_t m, bool measure, const Limits& limits, std::ostream& err) {
  std::optional<BigInt> measured;
  if (measure && q <= Code::kMaxAlphabet) {
    try {
      const Code code = construct_code(CodeParams{Field::of_order(q), static_cast<int>(m)}, limits);
      measured = BigInt(code.size());
    } catch (const ResourceLimit&) {
      err << "q=" << q << " m=" << m << ": size not measured (resource guard)\n";
    }
  }
  return compare_all(q, m, measured);
}

int cmd_compare(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const Limits limits = resolve_limits(cfg);
  std::vector<ComparisonRow> rows;
  if (cfg.all) {
    for (const auto& c : table_claims()) rows.push_back(compare_one(c.q, c.m, !cfg.no_measure, limits, err));
  } else {
    if (cfg.q == 0) throw UsageError("compare needs --q (or --all)");
    if (cfg.m < 1 || 2 * static_cast<std::uint64_t>(cfg.m) > cfg.q) throw UsageError("need 1 <= m <= q/2");
    const bool field_ok = prime_power(cfg.q).has_value();
    if (!field_ok) err << "q=" << cfg.q << " is not a prime power; size not measured\n";
    rows.push_back(compare_one(cfg.q, static_cast<std::uint64_t>(cfg.m), field_ok && !cfg.no_measure, limits, err));
  }
  if (cfg.format == "csv") {
    std::ostringstream os;
    os << comparison_csv_header() << '\n';
    for (const auto& r : rows) os << comparison_csv_row(r) << '\n';
    emit(cfg, out, os.str());
  } else {
    Json arr = Json::array();
    for (const auto& r : rows) arr.push_back(comparison_to_json(r));
    emit(cfg, out, dump(Json{{"schema", kSchemaVersion}, {"comparisons", arr}}));
  }
  return kOk;
}

int cmd_enumerate(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const FieldPtr field = resolve_field(cfg);
  if (cfg.m < 1) throw UsageError("--m must be >= 1");
  const CodeParams params{field, cfg.m};
  Limits limits = resolve_limits(cfg);
  try {
    std::ostringstream os;
    if (cfg.oracle) {
      const auto res = enumerate_Lm_oracle(params, limits);
      for (const auto& f : enumerate_Lm(params, limits)) os << f.to_string() << '\n';
      os << "# oracle_distinct=" << res.functions.size() << '\n'
         << "# raw_pairs=" << res.raw_pairs << '\n'
         << "# s1_pairs=" << res.s1_pairs << " s1_distinct=" << res.s1_distinct << '\n'
         << "# s2_pairs=" << res.s2_pairs << " s2_distinct=" << res.s2_distinct << '\n'
         << "# claimed_count=" << claimed_function_count(params.q(), static_cast<std::uint64_t>(cfg.m)) << '\n';
    } else {
      for (const auto& f : enumerate_Lm(params, limits)) os << f.to_string() << '\n';
    }
    emit(cfg, out, os.str());
    return kOk;
  } catch (const ResourceLimit& e) {
    err << "resource guard: " << e.what() << "\n";
    return kResourceGuard;
  }
}

int cmd_decode(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  std::optional<Code> code;
  try {
    if (!cfg.code_file.empty()) {
      std::ifstream f(cfg.code_file);
      if (!f) throw UsageError("cannot read " + cfg.code_file);
      nlohmann::json j;
      try {
        f >> j;
      } catch (const nlohmann::json::exception& e) {
        throw UsageError(std::string("malformed code file: ") + e.what());
      }
      code = code_from_json(j);
    } else {
      code = construct_code(resolve_params(cfg), resolve_limits(cfg));
    }
  } catch (const ResourceLimit& e) {
    err << "resource guard: " << e.what() << "\n";
    return kResourceGuard;
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }

  std::vector<Codeword> words;
  try {
    for (const auto& w : cfg.words) words.push_back(parse_word(w, code->field(), code->n()));
    if (!cfg.input.empty()) {
      std::ifstream f(cfg.input);
      if (!f) throw UsageError("cannot read " + cfg.input);
      auto more = parse_words(f, code->field(), code->n());
      words.insert(words.end(), more.begin(), more.end());
    }
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("malformed word: ") + e.what());
  }
  if (words.empty()) throw UsageError("decode needs --word or --input");

  std::ostringstream os;
  Json arr = Json::array();
  if (cfg.format == "csv") os << "input,decoded,distance,tie,row\n";
  for (const auto& w : words) {
    const auto res = decode_nearest(*code, w);
    const Codeword decoded = code->word(res.index);
    if (cfg.format == "csv") {
      os << '"' << w.to_string() << "\",\"" << decoded.to_string() << "\"," << res.distance << ','
         << (res.tie ? "true" : "false") << ',' << res.index << '\n';
    } else {
      arr.push_back({{"input", w.to_string()},
                     {"decoded", decoded.to_string()},
                     {"distance", res.distance},
                     {"tie", res.tie},
                     {"row", res.index}});
    }
  }
  emit(cfg, out, cfg.format == "csv" ? os.str() : dump(Json{{"schema", kSchemaVersion}, {"decoded", arr}}));
  return kOk;
}

void add_field_options(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--q", cfg.q, "Field size (prime power)");
  sub->add_option("--p", cfg.p, "Characteristic");
  sub->add_option("--k", cfg.k, "Extension degree");
  sub->add_option("--modulus", cfg.modulus, "Modulus coefficients over GF(p), constant term first, comma-separated");
}

void add_limit_options(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--max-words", cfg.max_words, "Enumeration guard (default 2000000, env RATCODE_MAX_WORDS)");
  sub->add_option("--max-pairs", cfg.max_pairs, "Exhaustive scan guard (default 4e9, env RATCODE_MAX_PAIRS)");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Construction and verification of (q+1)-ary codes from rational function fields", "ratcode"};
  app.require_subcommand(1);

  auto* construct = app.add_subcommand("construct", "Build C_m and write it as JSON or CSV");
  auto* verify = app.add_subcommand("verify", "Measure size and minimum distance of C_m against the claims");
  auto* table = app.add_subcommand("table", "Tabulated parameters with recomputed formula columns");
  auto* claims = app.add_subcommand("claims", "Export the claims registry");
  auto* compare = app.add_subcommand("compare", "Compare against extension, restriction and residue-ring bounds");
  auto* enumerate = app.add_subcommand("enumerate", "List the functions of L_m in canonical form");
  auto* decode = app.add_subcommand("decode", "Nearest-codeword decoding by exhaustive search");

  for (auto* sub : {construct, verify, table, claims, compare, enumerate, decode}) {
    sub->add_option("--output,-o", cfg.output, "Output file (default stdout)");
    sub->add_option("--format", cfg.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  }
  for (auto* sub : {construct, verify, compare, enumerate, decode}) {
    add_field_options(sub, cfg);
    sub->add_option("--m", cfg.m, "Degree bound m");
    add_limit_options(sub, cfg);
  }
  verify->add_option("--mode", cfg.mode, "exact or sampled")->check(CLI::IsMember({"exact", "sampled"}));
  verify->add_option("--budget", cfg.budget, "Sampled pair budget");
  verify->add_option("--seed", cfg.seed, "Sampling seed");
  verify->add_option("--workers", cfg.workers, "Threads for the exhaustive scan")->check(CLI::Range(1u, 1024u));
  verify->add_flag("--timings", cfg.timings, "Include wall-clock timings in the report");
  enumerate->add_flag("--oracle", cfg.oracle, "Cross-check against the pair-enumeration oracle");
  compare->add_flag("--all", cfg.all, "Every tabulated (q, m)");
  compare->add_flag("--no-measure", cfg.no_measure, "Skip size measurement");
  decode->add_option("--word", cfg.words, "Word to decode (comma-separated symbols, inf allowed)");
  decode->add_option("--input", cfg.input, "File with one word per line");
  decode->add_option("--code", cfg.code_file, "Decode against a serialized code instead of C_m");

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n" << app.help();
    return kUsage;
  }

  if (cfg.format != "json" && cfg.format != "csv") {
    err << "usage error: --format must be json or csv\n";
    return kUsage;
  }
  try {
    if (construct->parsed()) return cmd_construct(cfg, out, err);
    if (verify->parsed()) return cmd_verify(cfg, out, err);
    if (table->parsed()) return cmd_table(cfg, out, err);
    if (claims->parsed()) return cmd_claims(cfg, out, err);
    if (compare->parsed()) return cmd_compare(cfg, out, err);
    if (enumerate->parsed()) return cmd_enumerate(cfg, out, err);
    if (decode->parsed()) return cmd_decode(cfg, out, err);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace ratcode::cli
