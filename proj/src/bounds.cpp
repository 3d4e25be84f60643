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

#include "ratcode/bounds.hpp"

#include <algorithm>
#include <tuple>
#include <sstream>
#include <stdexcept>

#include "ratcode/gf.hpp"

namespace ratcode {

BigInt ipow(std::uint64_t base, std::uint64_t exp) {
  BigInt r = 1;
  BigInt b = base;
  while (exp > 0) {
    if (exp & 1) r *= b;
    b *= b;
    exp >>= 1;
  }
  return r;
}

BigRatio::BigRatio(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_ <= 0) throw std::invalid_argument("ratio: denominator must be positive");
  if (num_ < 0) throw std::invalid_argument("ratio: numerator must be nonnegative");
  const BigInt g = boost::multiprecision::gcd(num_, den_);
  if (g > 1) {
    num_ /= g;
    den_ /= g;
  }
}

std::strong_ordering operator<=>(const BigRatio& a, const BigRatio& b) {
  const BigInt lhs = a.num_ * b.den_;
  const BigInt rhs = b.num_ * a.den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::strong_ordering operator<=>(const BigRatio& a, const BigInt& b) {
  const BigInt rhs = b * a.den_;
  if (a.num_ < rhs) return std::strong_ordering::less;
  if (a.num_ > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string BigRatio::to_string() const {
  if (den_ == 1) return num_.str();
  return num_.str() + "/" + den_.str();
}

BigInt claimed_function_count(std::uint64_t q, std::uint64_t m) {
  return ipow(q, 2 * m + 1) + ipow(q, 2 * m) - 2 * ipow(q, m) + 1;
}

BigInt claimed_code_size(std::uint64_t q, std::uint64_t m) { return claimed_function_count(q, m) + 1; }

BigInt singleton_max(std::uint64_t alphabet, std::uint64_t n, std::uint64_t d) {
  if (alphabet < 2) throw std::invalid_argument("singleton_max: alphabet size must be >= 2");
  if (d < 1 || d > n) throw std::invalid_argument("singleton_max: need 1 <= d <= n");
  return ipow(alphabet, n - d + 1);
}

XingBound xing_bound(std::uint64_t q, std::uint64_t d) {
  if (d == 0 || d >= q + 2) throw std::invalid_argument("xing_bound: need 0 < d < q + 2");
  BigRatio r(ipow(q + 1, q + 1), ipow(q + 2, d - 1));
  BigInt fl = r.floor();
  return XingBound{std::move(r), std::move(fl), is_prime(q + 2)};
}

BigInt extension_size(std::uint64_t q, std::uint64_t m) {
  if (m < 1 || 2 * m + 1 > q) throw std::invalid_argument("extension_size: need 1 <= m and 2m <= q - 1");
  return ipow(q, 2 * m + 1);
}

RestrictionSize restriction_size(std::uint64_t q, std::uint64_t m) {
  if (m < 1 || 2 * m > q) throw std::invalid_argument("restriction_size: need 1 <= m <= q/2");
  const BigRatio r(ipow(q + 1, q + 1), ipow(q + 2, q - 2 * m));
  RestrictionSize out{r.ceil(), prime_power(q + 2).has_value(), std::nullopt, {}};
  if (q == 9 && m == 2) {
    out.quoted = BigInt(61843);
    out.annotation = "worked instance quoted as (10,61843,6); exact ceiling of the formula gives " +
                     out.value.str() + ", matching the strict upper value 62093 of the residue-ring bound";
  }
  return out;
}

bool size_exceeds_alphabet_power(std::uint64_t q, std::uint64_t m) {
  if (m < 1 || 2 * m > q) throw std::invalid_argument("size check: need 1 <= m <= q/2");
  return claimed_code_size(q, m) > ipow(q + 1, 2 * m);
}

AsymptoticCheck asymptotic_check(std::uint64_t q, std::uint64_t m, std::optional<BigInt> measured_size) {
  if (m < 1 || 2 * m > q) throw std::invalid_argument("asymptotic_check: need 1 <= m <= q/2");
  // size / ((q+1)^{q+1} / (q+2)^{q-2m}) = size * (q+2)^{q-2m} / (q+1)^{q+1}
  const BigInt scale = ipow(q + 2, q - 2 * m);
  const BigInt base = ipow(q + 1, q + 1);
  BigRatio claimed(claimed_code_size(q, m) * scale, base);
  const bool wins = claimed > BigInt(1);
  AsymptoticCheck out{wins, std::move(claimed), std::nullopt, std::nullopt};
  if (measured_size) {
    BigRatio measured(*measured_size * scale, base);
    out.measured_wins = measured > BigInt(1);
    out.measured_margin = std::move(measured);
  }
  return out;
}

std::vector<SweepPoint> asymptotic_sweep(std::uint64_t m, std::uint64_t q_max) {
  std::vector<SweepPoint> out;
  for (std::uint64_t q = std::max<std::uint64_t>(2, 2 * m); q <= q_max; ++q) {
    if (!prime_power(q)) continue;
    out.push_back({q, asymptotic_check(q, m).claimed_wins});
  }
  return out;
}

std::optional<std::uint64_t> eventual_crossover(std::span<const SweepPoint> sweep) {
  std::optional<std::uint64_t> from;
  for (const auto& pt : sweep) {
    if (!pt.claimed_wins) from.reset();
    else if (!from) from = pt.q;
  }
  return from;
}

namespace {

ClaimRow row(std::uint64_t q, std::uint64_t m, const char* size) {
  return ClaimRow{q, m, q + 1, BigInt(size), q + 1 - 2 * m, "table"};
}

const std::vector<ClaimRow>& registry() {
  static const std::vector<ClaimRow> rows = {
      row(5, 1, "142"),
      row(5, 2, "3702"),
      row(9, 1, "794"),
      row(9, 2, "65450"),
      row(9, 3, "5312954"),
      row(9, 4, "430454090"),
      row(11, 1, "1432"),
      row(11, 2, "175452"),
      row(11, 3, "21256072"),
      row(11, 4, "2572277292"),
      row(11, 5, "311248773112"),
      row(13, 1, "2342"),
      row(13, 2, "399518"),
      row(13, 3, "67570934"),
      row(13, 4, "11420172974"),
      row(13, 5, "1930018143302"),
      row(13, 6, "326173182061118"),
  };
  return rows;
}

}  // namespace

std::span<const ClaimRow> table_claims() { return registry(); }

std::optional<ClaimRow> find_claim(std::uint64_t q, std::uint64_t m) {
  for (const auto& r : registry()) {
    if (r.q == q && r.m == m) return r;
  }
  return std::nullopt;
}

std::string claims_csv() {
  std::ostringstream os;
  os << "q,m,n,M_claimed,d_claimed,source\n";
  for (const auto& r : registry()) {
    os << r.q << ',' << r.m << ',' << r.n << ',' << r.size << ',' << r.d << ',' << r.source << '\n';
  }
  return os.str();
}

ComparisonRow compare_all(std::uint64_t q, std::uint64_t m, std::optional<BigInt> measured_size,
                          std::optional<std::uint64_t> measured_d) {
  if (m < 1 || 2 * m > q) throw std::invalid_argument("compare: need 1 <= m <= q/2");
  ComparisonRow r;
  r.q = q;
  r.m = m;
  r.n = q + 1;
  r.d = q + 1 - 2 * m;
  r.table_row = find_claim(q, m);
  r.in_table = r.table_row.has_value();
  r.formula_size = claimed_code_size(q, m);
  r.measured_size = std::move(measured_size);
  r.measured_d = measured_d;
  if (2 * m + 1 <= q) r.extension = extension_size(q, m);
  r.restriction = restriction_size(q, m);
  r.xing = xing_bound(q, r.d);
  r.singleton = singleton_max(q + 1, r.n, r.d);

  if (r.table_row) {
    r.table_matches_formula = r.table_row->size == r.formula_size && r.table_row->n == r.n && r.table_row->d == r.d;
  }
  if (r.measured_size) r.measurement_matches_claim = *r.measured_size == r.formula_size;

  auto beats = [&](const BigInt& size) {
    std::optional<bool> ext, res;
    if (r.extension) ext = size > *r.extension;
    if (r.restriction) res = size > r.restriction->value;
    const bool xing = BigRatio(size, 1) > r.xing->ratio;
    return std::tuple{ext, res, xing};
  };
  {
    auto [e, s, x] = beats(r.formula_size);
    r.claimed_beats_extension = e;
    r.claimed_beats_restriction = s;
    r.claimed_beats_xing = x;
  }
  if (r.measured_size) {
    auto [e, s, x] = beats(*r.measured_size);
    r.measured_beats_extension = e;
    r.measured_beats_restriction = s;
    r.measured_beats_xing = x;
  }

  // Largest guaranteed size among the comparison constructions; ties are
  // listed together, joined by '+'.
  std::vector<std::pair<std::string, BigInt>> sizes = {{"xing", r.xing->ratio.ceil()}};
  if (r.restriction) sizes.emplace_back("restriction", r.restriction->value);
  if (r.extension) sizes.emplace_back("extension", *r.extension);
  BigInt best = 0;
  for (const auto& [name, v] : sizes) best = std::max(best, v);
  for (const auto& [name, v] : sizes) {
    if (v != best) continue;
    if (!r.best_alternative.empty()) r.best_alternative += '+';
    r.best_alternative += name;
  }
  return r;
}

}  // namespace ratcode
