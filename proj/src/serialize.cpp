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

#include "ratcode/serialize.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <sstream>
#include <stdexcept>

namespace ratcode {

namespace {

Json symbol_json(Symbol s) {
  if (s.is_inf()) return "inf";
  return s.value();
}

Json word_json(const Codeword& w) {
  Json a = Json::array();
  for (Symbol s : w.symbols()) a.push_back(symbol_json(s));
  return a;
}

Symbol parse_symbol(std::string_view tok, const Field& field) {
  while (!tok.empty() && (tok.front() == ' ' || tok.front() == '\t')) tok.remove_prefix(1);
  while (!tok.empty() && (tok.back() == ' ' || tok.back() == '\t' || tok.back() == '\r')) tok.remove_suffix(1);
  if (tok == "inf") return Symbol::inf();
  std::uint32_t v = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || ptr != tok.data() + tok.size() || tok.empty()) {
    throw std::invalid_argument("bad symbol '" + std::string(tok) + "'");
  }
  if (!field.contains(v)) throw std::invalid_argument("symbol " + std::string(tok) + " outside the field");
  return Symbol::finite(v);
}

Json opt_bool(const std::optional<bool>& b) { return b ? Json(*b) : Json(nullptr); }

Json opt_big(const std::optional<BigInt>& b) { return b ? Json(b->str()) : Json(nullptr); }

}  // namespace

Json code_to_json(const Code& code) {
  const Field& f = code.field();
  Json j;
  j["schema"] = kSchemaVersion;
  j["p"] = f.p();
  j["k"] = f.k();
  j["q"] = f.q();
  j["modulus"] = f.modulus();
  j["m"] = code.m() ? Json(*code.m()) : Json(nullptr);
  j["n"] = code.n();
  j["coordinate_order"] = kCoordinateOrder;
  j["size"] = code.size();
  Json words = Json::array();
  for (std::size_t i = 0; i < code.size(); ++i) words.push_back(word_json(code.word(i)));
  j["words"] = std::move(words);
  return j;
}

std::string code_to_csv(const Code& code) {
  std::ostringstream os;
  const Field& f = code.field();
  const int finite = std::min<int>(code.n(), static_cast<int>(f.q()));
  for (int c = 0; c < code.n(); ++c) {
    if (c) os << ',';
    if (code.kind() == CodeKind::Rational && c == finite) os << "P_inf";
    else os << "P_" << c;
  }
  os << '\n';
  for (std::size_t i = 0; i < code.size(); ++i) os << code.word(i).to_string() << '\n';
  return os.str();
}

Code code_from_json(const nlohmann::json& j) {
  try {
    const auto p = j.at("p").get<std::uint32_t>();
    const auto k = j.at("k").get<std::uint32_t>();
    const auto modulus = j.at("modulus").get<std::vector<std::uint32_t>>();
    const int n = j.at("n").get<int>();
    FieldPtr field = Field::make(p, k, modulus);
    Code::Builder b(field, n, CodeKind::Imported);
    if (j.contains("m") && !j["m"].is_null()) b.m(j["m"].get<int>());
    for (const auto& w : j.at("words")) {
      std::vector<Symbol> s;
      for (const auto& sym : w) {
        if (sym.is_string()) {
          if (sym.get<std::string>() != "inf") throw std::invalid_argument("bad symbol in code file");
          s.push_back(Symbol::inf());
        } else {
          const auto v = sym.get<std::uint32_t>();
          if (!field->contains(v)) throw std::invalid_argument("symbol outside the field in code file");
          s.push_back(Symbol::finite(v));
        }
      }
      b.add(Codeword(std::move(s)), std::nullopt);
    }
    return std::move(b).build();
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed code file: ") + e.what());
  }
}

Codeword parse_word(std::string_view text, const Field& field, int n) {
  std::vector<Symbol> s;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    s.push_back(parse_symbol(text.substr(start, comma == std::string_view::npos ? text.npos : comma - start), field));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  if (s.size() != static_cast<std::size_t>(n)) {
    throw std::invalid_argument("word has " + std::to_string(s.size()) + " symbols, expected " + std::to_string(n));
  }
  return Codeword(std::move(s));
}

std::vector<Codeword> parse_words(std::istream& in, const Field& field, int n) {
  std::vector<Codeword> out;
  std::string line;
  while (std::getline(in, line)) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    out.push_back(parse_word(line, field, n));
  }
  return out;
}

Json report_to_json(const VerifyReport& r, bool include_timings) {
  Json j;
  j["schema"] = kSchemaVersion;
  j["command"] = "verify";
  j["field"] = {{"p", r.p}, {"k", r.k}, {"q", r.q}, {"modulus", r.modulus}};
  j["m"] = r.m;
  j["n"] = r.n;
  j["coordinate_order"] = kCoordinateOrder;
  j["size"] = {{"measured_functions", r.measured_functions},
               {"claimed_functions", r.claimed_functions.str()},
               {"measured_M", r.measured_size},
               {"claimed_M", r.claimed_size.str()},
               {"injective", r.injective},
               {"collisions", r.collisions}};
  j["distance"] = {{"mode", r.mode == DistanceMode::Exact ? "exact" : "sampled"},
                   {"measured_d", r.measured_d},
                   {"claimed_d", r.claimed_d},
                   {"lower_bound", r.claimed_d},
                   {"pairs_examined", r.pairs_examined},
                   {"witness",
                    {{"rows", {r.witness_first, r.witness_second}},
                     {"words", {word_json(r.witness_word_first), word_json(r.witness_word_second)}}}}};
  j["singleton"] = {{"max_M", r.singleton_max.str()},
                    {"defect", r.singleton_defect.str()},
                    {"size_forces_distance", r.size_forces_distance}};
  j["poles"] = {{"max_pole_count", r.max_pole_count}, {"distance_to_allinf", r.distance_to_allinf}};
  j["invariants"] = {{"distance_lower_bound", r.distance_bound_holds},
                     {"singleton", opt_bool(r.singleton_holds)},
                     {"pole_bound", r.pole_bound_holds},
                     {"all_hold", r.invariants_hold()}};
  j["discrepancies"] = r.discrepancies;
  if (include_timings) {
    j["timings"] = {{"enumerate_seconds", r.enumerate_seconds}, {"scan_seconds", r.scan_seconds}};
  }
  return j;
}

Json comparison_to_json(const ComparisonRow& r) {
  Json j;
  j["q"] = r.q;
  j["m"] = r.m;
  j["n"] = r.n;
  j["d"] = r.d;
  j["in_table"] = r.in_table;
  j["table_M"] = r.table_row ? Json(r.table_row->size.str()) : Json(nullptr);
  j["claimed_M"] = r.formula_size.str();
  j["measured_M"] = opt_big(r.measured_size);
  j["measured_d"] = r.measured_d ? Json(*r.measured_d) : Json(nullptr);
  j["extension_M"] = opt_big(r.extension);
  if (r.restriction) {
    Json res;
    res["M"] = r.restriction->value.str();
    res["hypothesis_q_plus_2_prime_power"] = r.restriction->hypothesis_holds;
    res["quoted_M"] = opt_big(r.restriction->quoted);
    res["annotation"] = r.restriction->annotation.empty() ? Json(nullptr) : Json(r.restriction->annotation);
    j["restriction"] = std::move(res);
  } else {
    j["restriction"] = nullptr;
  }
  j["xing"] = {{"ratio", r.xing->ratio.to_string()},
               {"floor", r.xing->floor.str()},
               {"strict_upper", BigInt(r.xing->floor + 1).str()},
               {"hypothesis_q_plus_2_prime", r.xing->hypothesis_holds}};
  j["singleton_M"] = r.singleton.str();
  j["verdicts"] = {{"table_matches_formula", r.table_matches_formula},
                   {"measurement_matches_claim", opt_bool(r.measurement_matches_claim)},
                   {"claimed_beats_extension", opt_bool(r.claimed_beats_extension)},
                   {"claimed_beats_restriction", opt_bool(r.claimed_beats_restriction)},
                   {"claimed_beats_xing", opt_bool(r.claimed_beats_xing)},
                   {"measured_beats_extension", opt_bool(r.measured_beats_extension)},
                   {"measured_beats_restriction", opt_bool(r.measured_beats_restriction)},
                   {"measured_beats_xing", opt_bool(r.measured_beats_xing)},
                   {"best_alternative", r.best_alternative}};
  return j;
}

std::string comparison_csv_header() {
  return "q,m,n,d,in_table,claimed_M,measured_M,extension_M,restriction_M,xing_floor,singleton_M,"
         "claimed_beats_xing,measured_beats_xing,best_alternative";
}

std::string comparison_csv_row(const ComparisonRow& r) {
  auto b = [](const std::optional<bool>& v) -> std::string { return v ? (*v ? "true" : "false") : ""; };
  auto big = [](const std::optional<BigInt>& v) -> std::string { return v ? v->str() : ""; };
  std::ostringstream os;
  os << r.q << ',' << r.m << ',' << r.n << ',' << r.d << ',' << (r.in_table ? "true" : "false") << ','
     << r.formula_size << ',' << big(r.measured_size) << ',' << big(r.extension) << ','
     << (r.restriction ? r.restriction->value.str() : "") << ',' << r.xing->floor << ',' << r.singleton << ','
     << b(r.claimed_beats_xing) << ',' << b(r.measured_beats_xing) << ',' << r.best_alternative;
  return os.str();
}

}  // namespace ratcode
