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

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace ratcode {

using BigInt = boost::multiprecision::cpp_int;

BigInt ipow(std::uint64_t base, std::uint64_t exp);

/// Nonnegative rational in lowest terms. All comparisons are exact.
class BigRatio {
 public:
  BigRatio(BigInt num, BigInt den);

  const BigInt& num() const { return num_; }
  const BigInt& den() const { return den_; }

  BigInt floor() const { return num_ / den_; }
  BigInt ceil() const { return (num_ + den_ - 1) / den_; }
  bool is_integer() const { return den_ == 1; }

  friend bool operator==(const BigRatio&, const BigRatio&) = default;
  friend std::strong_ordering operator<=>(const BigRatio& a, const BigRatio& b);
  friend std::strong_ordering operator<=>(const BigRatio& a, const BigInt& b);
  friend bool operator==(const BigRatio& a, const BigInt& b) { return a.den_ == 1 && a.num_ == b; }

  /// "num/den" (or just "num" when integral).
  std::string to_string() const;

 private:
  BigInt num_;
  BigInt den_;
};

/// q^{2m+1} + q^{2m} - 2 q^m + 1: the closed-form count of the union of
/// Riemann-Roch spaces L(G), G >= 0, deg G <= m, as claimed by the
/// representation-counting argument. A claim, not a measurement.
BigInt claimed_function_count(std::uint64_t q, std::uint64_t m);
/// claimed_function_count + 1 (the all-inf word).
BigInt claimed_code_size(std::uint64_t q, std::uint64_t m);

/// alphabet^{n - d + 1}. Requires 1 <= d <= n and alphabet >= 2.
BigInt singleton_max(std::uint64_t alphabet, std::uint64_t n, std::uint64_t d);

struct XingBound {
  BigRatio ratio;        // (q+1)^{q+1} / (q+2)^{d-1}
  BigInt floor;
  bool hypothesis_holds;  // q + 2 prime
};

/// Lower bound on the size of a (q+1)-ary (q+1, M, >= d) code from the
/// residue-ring construction. Requires 0 < d < q + 2.
XingBound xing_bound(std::uint64_t q, std::uint64_t d);

/// Size q^{2m+1} of the (q+1)-ary code obtained by alphabet extension of a
/// q-ary [q+1, 2m+1, q+1-2m] MDS code. Requires 2m <= q - 1.
BigInt extension_size(std::uint64_t q, std::uint64_t m);

struct RestrictionSize {
  BigInt value;  // ceil((q+1)^{q+1} / (q+2)^{q-2m})
  bool hypothesis_holds;  // q + 2 a prime power
  std::optional<BigInt> quoted;  // worked value quoted alongside the formula, if any
  std::string annotation;
};

/// Size guaranteed by alphabet restriction of a (q+2)-ary
/// [q+1, 2m+1, q+1-2m] MDS code. Requires 2m <= q.
RestrictionSize restriction_size(std::uint64_t q, std::uint64_t m);

/// claimed_code_size(q, m) > (q+1)^{2m}, exactly. Requires 1 <= m <= q/2.
bool size_exceeds_alphabet_power(std::uint64_t q, std::uint64_t m);

struct AsymptoticCheck {
  bool claimed_wins;
  BigRatio claimed_margin;  // claimed size / xing ratio
  std::optional<bool> measured_wins;
  std::optional<BigRatio> measured_margin;
};

/// Compares the claimed (and optionally the measured) code size against
/// (q+1)^{q+1} / (q+2)^{q-2m} by cross-multiplication. Requires 2m <= q.
AsymptoticCheck asymptotic_check(std::uint64_t q, std::uint64_t m,
                                 std::optional<BigInt> measured_size = std::nullopt);

struct SweepPoint {
  std::uint64_t q;
  bool claimed_wins;
};

/// asymptotic_check over every prime power q in [2m, q_max].
std::vector<SweepPoint> asymptotic_sweep(std::uint64_t m, std::uint64_t q_max);
/// Smallest q in the sweep from which every later point wins, if any.
std::optional<std::uint64_t> eventual_crossover(std::span<const SweepPoint> sweep);

struct ClaimRow {
  std::uint64_t q;
  std::uint64_t m;
  std::uint64_t n;
  BigInt size;
  std::uint64_t d;
  std::string source;
};

/// The seventeen tabulated (n, M, d) parameters for q in {5, 9, 11, 13}.
std::span<const ClaimRow> table_claims();
std::optional<ClaimRow> find_claim(std::uint64_t q, std::uint64_t m);
/// Columns q,m,n,M_claimed,d_claimed,source.
std::string claims_csv();

struct ComparisonRow {
  std::uint64_t q;
  std::uint64_t m;
  std::uint64_t n;
  std::uint64_t d;  // q + 1 - 2m
  bool in_table;
  std::optional<ClaimRow> table_row;
  BigInt formula_size;  // claimed_code_size
  std::optional<BigInt> measured_size;
  std::optional<std::uint64_t> measured_d;
  std::optional<BigInt> extension;
  std::optional<RestrictionSize> restriction;
  std::optional<XingBound> xing;
  BigInt singleton;  // (q+1)^{2m+1}

  // Verdicts. Optional ones are absent when either side is unavailable.
  bool table_matches_formula = true;
  std::optional<bool> measurement_matches_claim;
  std::optional<bool> claimed_beats_extension;
  std::optional<bool> claimed_beats_restriction;
  std::optional<bool> claimed_beats_xing;
  std::optional<bool> measured_beats_extension;
  std::optional<bool> measured_beats_restriction;
  std::optional<bool> measured_beats_xing;
  std::string best_alternative;  // comparison construction with the largest size
};

ComparisonRow compare_all(std::uint64_t q, std::uint64_t m,
                          std::optional<BigInt> measured_size = std::nullopt,
                          std::optional<std::uint64_t> measured_d = std::nullopt);

}  // namespace ratcode
