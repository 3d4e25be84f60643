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

#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "ratcode/bounds.hpp"
#include "ratcode/code.hpp"
#include "ratcode/verify.hpp"

namespace ratcode {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;
inline constexpr const char* kCoordinateOrder = "alpha_1..alpha_q in ascending encoding, then inf";

/// {schema, p, k, q, modulus, m, n, coordinate_order, size, words}; a symbol
/// is its integer encoding or the string "inf".
Json code_to_json(const Code& code);
/// Header row of coordinate labels, then one row per codeword.
std::string code_to_csv(const Code& code);
/// Rebuilds the field from p, k and modulus and the words as an imported
/// code. Throws std::invalid_argument on malformed input.
Code code_from_json(const nlohmann::json& j);

/// Comma-separated symbols ("inf" or encodings). Throws
/// std::invalid_argument on bad tokens or a wrong length.
Codeword parse_word(std::string_view text, const Field& field, int n);
/// One word per non-empty line; lines starting with '#' are skipped.
std::vector<Codeword> parse_words(std::istream& in, const Field& field, int n);

Json report_to_json(const VerifyReport& r, bool include_timings);
Json comparison_to_json(const ComparisonRow& r);
std::string comparison_csv_header();
std::string comparison_csv_row(const ComparisonRow& r);

}  // namespace ratcode
