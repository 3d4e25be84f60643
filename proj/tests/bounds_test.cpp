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

#include <gtest/gtest.h>

#include "ratcode/bounds.hpp"
#include "ratcode/gf.hpp"

namespace ratcode {
namespace {

BigInt big(const char* s) { return BigInt(s); }

TEST(BoundsTest, BigRatioLowestTerms) {
  BigRatio r(6, 4);
  EXPECT_EQ(r.num(), 3);
  EXPECT_EQ(r.den(), 2);
  EXPECT_EQ(r.floor(), 1);
  EXPECT_EQ(r.ceil(), 2);
  EXPECT_FALSE(r.is_integer());
  EXPECT_EQ(r.to_string(), "3/2");
  EXPECT_TRUE(BigRatio(8, 4).is_integer());
  EXPECT_EQ(BigRatio(8, 4).ceil(), 2);
  EXPECT_TRUE(BigRatio(1, 3) < BigRatio(1, 2));
  EXPECT_TRUE(BigRatio(7, 2) > BigInt(3));
  EXPECT_THROW(BigRatio(1, 0), std::invalid_argument);
}

TEST(BoundsTest, FloorCeilPairs) {
  for (int n = 0; n < 60; ++n) {
    for (int d = 1; d < 13; ++d) {
      BigRatio r(n, d);
      const BigInt diff = r.ceil() - r.floor();
      EXPECT_EQ(diff, n % d == 0 ? 0 : 1);
      EXPECT_EQ(r.floor(), n / d);
    }
  }
}

TEST(BoundsTest, ClaimedCounts) {
  EXPECT_EQ(claimed_function_count(2, 1), 9);
  EXPECT_EQ(claimed_function_count(5, 1), 141);
  EXPECT_EQ(claimed_code_size(5, 1), 142);
  EXPECT_EQ(claimed_function_count(9, 2), 65449);
  EXPECT_EQ(claimed_code_size(9, 2), 65450);
  EXPECT_EQ(claimed_function_count(3, 1), 31);
  EXPECT_EQ(claimed_function_count(2, 2), 41);
}

TEST(BoundsTest, SingletonMax) {
  EXPECT_EQ(singleton_max(3, 3, 2), 9);
  EXPECT_EQ(singleton_max(3, 3, 1), 27);
  EXPECT_EQ(singleton_max(10, 10, 6), 100000);
  EXPECT_EQ(singleton_max(6, 6, 4), ipow(6, 3));
  EXPECT_THROW(singleton_max(3, 3, 4), std::invalid_argument);
  EXPECT_THROW(singleton_max(1, 3, 2), std::invalid_argument);
}

TEST(BoundsTest, XingBound) {
  auto x91 = xing_bound(9, 8);
  EXPECT_EQ(x91.floor, 513);
  EXPECT_TRUE(x91.ratio < BigInt(514));
  EXPECT_TRUE(x91.hypothesis_holds);
  auto x92 = xing_bound(9, 6);
  EXPECT_EQ(x92.floor, 62092);
  EXPECT_TRUE(x92.ratio < BigInt(62093));
  auto x271 = xing_bound(27, 26);
  EXPECT_EQ(x271.floor, 9130);
  EXPECT_TRUE(x271.hypothesis_holds);
  EXPECT_EQ(xing_bound(27, 24).floor, 7678403);
  EXPECT_EQ(xing_bound(27, 22).floor, big("6457537274"));
  EXPECT_FALSE(xing_bound(13, 10).hypothesis_holds);  // 15 is not prime
  EXPECT_THROW(xing_bound(9, 0), std::invalid_argument);
  EXPECT_THROW(xing_bound(9, 11), std::invalid_argument);
}

TEST(BoundsTest, ExtensionAndRestriction) {
  EXPECT_EQ(extension_size(9, 2), 59049);
  EXPECT_EQ(extension_size(5, 1), 125);
  EXPECT_THROW(extension_size(4, 2), std::invalid_argument);

  auto r92 = restriction_size(9, 2);
  EXPECT_EQ(r92.value, 62093);
  EXPECT_TRUE(r92.hypothesis_holds);
  ASSERT_TRUE(r92.quoted.has_value());
  EXPECT_EQ(*r92.quoted, 61843);
  EXPECT_FALSE(r92.annotation.empty());
  EXPECT_TRUE(r92.value > extension_size(9, 2));

  EXPECT_EQ(restriction_size(9, 1).value, 514);
  // ceil(12^12 / 13^7) computed by hand: 12^12 = 8916100448256,
  // 13^7 = 62748517, quotient 142092.4...
  EXPECT_EQ(restriction_size(11, 2).value, 142093);
  EXPECT_FALSE(restriction_size(4, 1).hypothesis_holds);  // 6 is not a prime power
  EXPECT_FALSE(restriction_size(11, 1).quoted.has_value());
}

TEST(BoundsTest, SizeExceedsAlphabetPowerOnGrid) {
  EXPECT_TRUE(size_exceeds_alphabet_power(2, 1));
  EXPECT_TRUE(size_exceeds_alphabet_power(9, 2));
  for (std::uint64_t q = 2; q <= 64; ++q) {
    if (!prime_power(q)) continue;
    for (std::uint64_t m = 1; 2 * m <= q; ++m) EXPECT_TRUE(size_exceeds_alphabet_power(q, m)) << q << "," << m;
  }
  EXPECT_THROW(size_exceeds_alphabet_power(5, 3), std::invalid_argument);
}

TEST(BoundsTest, AsymptoticCheck) {
  auto a91 = asymptotic_check(9, 1);
  EXPECT_TRUE(a91.claimed_wins);
  auto a273 = asymptotic_check(27, 3);
  EXPECT_TRUE(a273.claimed_wins);
  EXPECT_FALSE(a273.measured_wins.has_value());
  auto with_measure = asymptotic_check(5, 1, BigInt(126));
  ASSERT_TRUE(with_measure.measured_wins.has_value());

  const auto sweep = asymptotic_sweep(1, 512);
  ASSERT_FALSE(sweep.empty());
  const auto cross = eventual_crossover(sweep);
  ASSERT_TRUE(cross.has_value());
  for (const auto& pt : sweep) {
    if (pt.q >= *cross) {
      EXPECT_TRUE(pt.claimed_wins) << pt.q;
    }
  }
}

TEST(BoundsTest, TableRegistry) {
  const auto rows = table_claims();
  EXPECT_EQ(rows.size(), 17u);
  for (const auto& r : rows) {
    EXPECT_EQ(r.n, r.q + 1);
    EXPECT_EQ(r.d, r.q + 1 - 2 * r.m);
    // Recomputation from the closed form, independent of the library helper.
    const BigInt q = r.q;
    BigInt q2m = 1;
    for (std::uint64_t i = 0; i < 2 * r.m; ++i) q2m *= q;
    BigInt qm = 1;
    for (std::uint64_t i = 0; i < r.m; ++i) qm *= q;
    EXPECT_EQ(r.size, q2m * q + q2m - 2 * qm + 2) << r.q << "," << r.m;
  }
  auto r92 = find_claim(9, 2);
  ASSERT_TRUE(r92.has_value());
  EXPECT_EQ(r92->size, 65450);
  auto r136 = find_claim(13, 6);
  ASSERT_TRUE(r136.has_value());
  EXPECT_EQ(r136->size, big("326173182061118"));
  EXPECT_EQ(r136->d, 2u);
  EXPECT_FALSE(find_claim(7, 1).has_value());
}

TEST(BoundsTest, ClaimsCsv) {
  const auto csv = claims_csv();
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "q,m,n,M_claimed,d_claimed,source");
  EXPECT_NE(csv.find("9,2,10,65450,6,"), std::string::npos);
}

TEST(BoundsTest, CompareAll) {
  auto row = compare_all(9, 2, BigInt(59050), 6);
  EXPECT_TRUE(row.in_table);
  EXPECT_EQ(row.formula_size, 65450);
  ASSERT_TRUE(row.extension.has_value());
  EXPECT_EQ(*row.extension, 59049);
  ASSERT_TRUE(row.restriction.has_value());
  EXPECT_EQ(row.restriction->value, 62093);
  EXPECT_EQ(row.xing->floor, 62092);
  EXPECT_TRUE(row.table_matches_formula);
  EXPECT_EQ(row.measurement_matches_claim, false);
  EXPECT_EQ(row.claimed_beats_restriction, true);
  EXPECT_EQ(row.measured_beats_restriction, false);
  EXPECT_EQ(row.measured_beats_extension, true);
  // ceil of the xing ratio and the restriction size are both 62093.
  EXPECT_EQ(row.best_alternative, "xing+restriction");

  auto off = compare_all(7, 1);
  EXPECT_FALSE(off.in_table);
  EXPECT_FALSE(off.measurement_matches_claim.has_value());

  auto x272 = compare_all(27, 2);
  EXPECT_EQ(x272.xing->floor, 7678403);
}

}  // namespace
}  // namespace ratcode
