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

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "ratcode/bounds.hpp"
#include "ratcode/funcfield.hpp"
#include "ratcode/gf.hpp"

namespace ratcode {

/// Guard thresholds. Defaults admit q = 9, m = 2 and refuse anything whose
/// enumeration would not fit comfortably in memory.
struct Limits {
  std::uint64_t max_words = 2'000'000;
  std::uint64_t max_pairs = 4'000'000'000ULL;
  std::uint64_t max_oracle_pairs = 50'000'000;

  /// Defaults overridden by RATCODE_MAX_WORDS / RATCODE_MAX_PAIRS.
  static Limits from_env();
};

struct CodeParams {
  FieldPtr field;
  int m = 1;

  std::uint32_t q() const { return field->q(); }
  int n() const { return static_cast<int>(field->q()) + 1; }
  /// 1 <= m <= q/2. Throws std::invalid_argument otherwise.
  void validate() const;
};

class Codeword {
 public:
  Codeword() = default;
  explicit Codeword(std::vector<Symbol> symbols) : symbols_(std::move(symbols)) {}

  std::size_t size() const { return symbols_.size(); }
  Symbol operator[](std::size_t i) const { return symbols_[i]; }
  const std::vector<Symbol>& symbols() const { return symbols_; }

  friend bool operator==(const Codeword&, const Codeword&) = default;

  /// Comma-separated encodings with "inf".
  std::string to_string() const;

 private:
  std::vector<Symbol> symbols_;
};

enum class CodeKind { Rational, AlgebraicGeometry, Imported };

/// A deduplicated set of codewords over Sigma, stored row-major with one
/// byte per symbol (inf is stored as q) and rows padded to a multiple of 16
/// bytes with zeros. Rows keep insertion order, which is the enumeration
/// order of their generating functions.
class Code {
 public:
  class Builder;

  static constexpr std::uint32_t kMaxAlphabet = 255;

  const Field& field() const { return *field_; }
  const FieldPtr& field_ptr() const { return field_; }
  int n() const { return n_; }
  std::size_t stride() const { return stride_; }
  std::size_t size() const { return sources_.size(); }
  CodeKind kind() const { return kind_; }
  std::optional<int> m() const { return m_; }
  std::optional<int> dimension() const { return dimension_; }
  std::uint8_t inf_byte() const { return static_cast<std::uint8_t>(field_->q()); }

  std::span<const std::uint8_t> packed() const { return table_; }
  std::span<const std::uint8_t> row(std::size_t i) const {
    return std::span<const std::uint8_t>(table_).subspan(i * stride_, stride_);
  }
  Codeword word(std::size_t i) const;
  /// Generating function, or nullopt for the all-inf word and imported rows.
  const std::optional<RatFun>& source(std::size_t i) const { return sources_.at(i); }
  std::optional<std::size_t> all_inf_index() const { return all_inf_index_; }
  std::optional<std::size_t> find(const Codeword& w) const;

  /// Number of words offered to the builder, counting rejected duplicates.
  std::uint64_t offered() const { return offered_; }

  struct Collision {
    std::size_t existing;  // row already holding the word
    std::optional<RatFun> duplicate;
  };
  const std::vector<Collision>& collisions() const { return collisions_; }
  bool injective() const { return collisions_.empty(); }

  const std::vector<std::string>& notes() const { return notes_; }

  /// Byte encoding of a word of this code's length and alphabet.
  std::vector<std::uint8_t> pack(const Codeword& w) const;

 private:
  Code() = default;

  FieldPtr field_;
  int n_ = 0;
  std::size_t stride_ = 0;
  CodeKind kind_ = CodeKind::Imported;
  std::optional<int> m_;
  std::optional<int> dimension_;
  std::vector<std::uint8_t> table_;
  std::vector<std::optional<RatFun>> sources_;
  std::optional<std::size_t> all_inf_index_;
  std::uint64_t offered_ = 0;
  std::vector<Collision> collisions_;
  std::vector<std::string> notes_;
  std::unordered_map<std::string, std::size_t> index_;
};

class Code::Builder {
 public:
  Builder(FieldPtr field, int n, CodeKind kind);

  Builder& m(int m);
  Builder& dimension(int k);
  Builder& note(std::string text);
  /// Appends w unless already present; a repeat is recorded as a collision
  /// and false is returned.
  bool add(const Codeword& w, std::optional<RatFun> source);
  Code build() &&;

 private:
  Code code_;
};

/// The union of L(G) over effective G with deg G <= m, as a set of
/// canonical functions: for each monic denominator v with deg v <= m
/// (ascending encoding) every numerator u with deg u <= m and gcd(u, v) = 1
/// (ascending encoding), the zero function first. Throws ResourceLimit when
/// the claimed count exceeds limits.max_words.
std::vector<RatFun> enumerate_Lm(const CodeParams& params, const Limits& limits = {});

struct OracleEnumeration {
  std::vector<RatFun> functions;  // distinct canonical forms, sorted
  std::uint64_t raw_pairs = 0;    // all (g, h) with h != 0, degrees <= m
  // Representation counts of the disjoint-union argument: S1 holds the
  // zero function plus (g != 0, h monic of degree exactly m); S2 holds
  // (deg g = m, h monic of degree < m).
  std::uint64_t s1_pairs = 0;
  std::uint64_t s2_pairs = 0;
  std::uint64_t s1_distinct = 0;
  std::uint64_t s2_distinct = 0;
};

/// Independent route to the same set: canonicalize every pair (g, h) with
/// deg g <= m, 0 <= deg h <= m and deduplicate. Throws ResourceLimit beyond
/// limits.max_oracle_pairs pairs.
OracleEnumeration enumerate_Lm_oracle(const CodeParams& params, const Limits& limits = {});

/// (f(P_alpha_1), ..., f(P_alpha_q), f(P_inf)). Throws
/// std::invalid_argument when f lies outside L_m.
Codeword phi(const RatFun& f, const CodeParams& params);

/// C_m: the image of phi on L_m plus the all-inf word, appended last.
Code construct_code(const CodeParams& params, const Limits& limits = {});

/// Evaluation code of L(G) at the rational places `points`, over F_q.
/// Requires G effective, supp(G) disjoint from the points and
/// deg G <= n - 2 (n - 1 accepted with a note).
Code ag_code(const FieldPtr& field, std::span<const Symbol> points, const Divisor& g,
             const Limits& limits = {});

/// [q+1, 2m+1, q+1-2m] code: ag_code at all rational places with
/// G = m * P_p, p the smallest monic irreducible quadratic. Requires
/// 2m <= q - 1.
Code mds_comparison_code(const FieldPtr& field, int m, const Limits& limits = {});

}  // namespace ratcode
