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

#include <algorithm>
#include <random>
#include <set>

#include "ratcode/code.hpp"
#include "ratcode/distance.hpp"
#include "ratcode/error.hpp"
#include "ratcode/serialize.hpp"
#include "ratcode/verify.hpp"

namespace ratcode {
namespace {

Poly P(const FieldPtr& f, std::vector<Elem> c) { return Poly(f, std::move(c)); }
RatFun R(const FieldPtr& f, std::vector<Elem> g, std::vector<Elem> h) { return RatFun::make(P(f, g), P(f, h)); }
Codeword W(std::initializer_list<int> s) {
  std::vector<Symbol> out;
  for (int v : s) out.push_back(v < 0 ? Symbol::inf() : Symbol::finite(v));
  return Codeword(out);
}
constexpr int kInf = -1;

std::uint64_t upow(std::uint64_t b, int e) {
  std::uint64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

TEST(CodeTest, EnumerateSmallest) {
  auto f2 = Field::of_order(2);
  auto fs = enumerate_Lm({f2, 1});
  std::set<RatFun> got(fs.begin(), fs.end());
  std::set<RatFun> want = {R(f2, {}, {1}),     R(f2, {1}, {1}),     R(f2, {0, 1}, {1}), R(f2, {1, 1}, {1}),
                           R(f2, {1}, {0, 1}), R(f2, {1, 1}, {0, 1}), R(f2, {1}, {1, 1}), R(f2, {0, 1}, {1, 1})};
  EXPECT_EQ(fs.size(), 8u);
  EXPECT_EQ(got, want);
  EXPECT_TRUE(fs.front().is_zero());
}

TEST(CodeTest, EnumerationMatchesOracle) {
  // Coprime pairs (u, v), v monic, degrees <= m, number q^{2m+1}; this
  // count is independent of both enumerations.
  for (int q : {2, 3, 4, 5}) {
    for (int m : {1, 2}) {
      auto f = Field::of_order(q);
      auto fast = enumerate_Lm({f, m});
      auto oracle = enumerate_Lm_oracle({f, m});
      std::sort(fast.begin(), fast.end());
      EXPECT_EQ(fast, oracle.functions) << "q=" << q << " m=" << m;
      EXPECT_EQ(fast.size(), upow(q, 2 * m + 1));
      for (const auto& g : fast) EXPECT_LE(g.height(), m);
    }
  }
  EXPECT_EQ(enumerate_Lm({Field::of_order(3), 1}).size(), 27u);
  EXPECT_EQ(enumerate_Lm({Field::of_order(2), 2}).size(), 32u);
}

TEST(CodeTest, OracleRepresentationCounts) {
  auto res = enumerate_Lm_oracle({Field::of_order(2), 1});
  EXPECT_EQ(res.functions.size(), 8u);
  EXPECT_EQ(res.raw_pairs, 12u);
  EXPECT_EQ(res.s1_pairs, 7u);
  EXPECT_EQ(res.s2_pairs, 2u);
  EXPECT_EQ(claimed_function_count(2, 1), 9);
}

TEST(CodeTest, PhiExamples) {
  auto f2 = Field::of_order(2);
  const CodeParams params{f2, 1};
  EXPECT_EQ(phi(R(f2, {1}, {0, 1}), params), W({kInf, 1, 0}));
  EXPECT_EQ(phi(R(f2, {0, 1}, {1}), params), W({0, 1, kInf}));
  auto f5 = Field::of_order(5);
  EXPECT_EQ(phi(RatFun::from_poly(Poly::one(f5)), {f5, 2}), W({1, 1, 1, 1, 1, 1}));
  EXPECT_THROW(phi(R(f2, {0, 0, 1}, {1}), params), std::invalid_argument);
}

TEST(CodeTest, ConstructSizes) {
  auto c2 = construct_code({Field::of_order(2), 1});
  EXPECT_EQ(c2.size(), 9u);
  EXPECT_TRUE(c2.injective());
  ASSERT_TRUE(c2.all_inf_index().has_value());
  EXPECT_EQ(*c2.all_inf_index(), 8u);
  EXPECT_EQ(c2.word(8), W({kInf, kInf, kInf}));
  EXPECT_EQ(construct_code({Field::of_order(3), 1}).size(), 28u);
  auto c5 = construct_code({Field::of_order(5), 1});
  EXPECT_EQ(c5.size(), 126u);
  EXPECT_TRUE(c5.injective());
  EXPECT_THROW(construct_code({Field::of_order(5), 3}), std::invalid_argument);
}

TEST(CodeTest, ConstructionIsDeterministic) {
  auto a = construct_code({Field::of_order(7), 2});
  auto b = construct_code({Field::of_order(7), 2});
  ASSERT_EQ(a.size(), b.size());
  EXPECT_TRUE(std::equal(a.packed().begin(), a.packed().end(), b.packed().begin()));
}

TEST(CodeTest, ResourceGuards) {
  Limits tight;
  tight.max_words = 100;
  EXPECT_THROW(construct_code({Field::of_order(5), 1}, tight), ResourceLimit);
  Limits few_pairs;
  few_pairs.max_pairs = 10;
  auto c = construct_code({Field::of_order(3), 1});
  EXPECT_THROW(min_distance_exact(c, {1, few_pairs}), ResourceLimit);
}

TEST(CodeTest, HammingExamples) {
  EXPECT_EQ(hamming_distance(W({0, 0, 0}), W({0, 1, kInf})), 2);
  EXPECT_EQ(hamming_distance(W({0, 1, kInf}), W({0, 1, kInf})), 0);
  EXPECT_EQ(hamming_distance(W({kInf, 1, 0}), W({kInf, 0, 1})), 2);
  EXPECT_THROW(hamming_distance(W({0}), W({0, 1})), std::invalid_argument);
}

TEST(CodeTest, MinimumDistanceExamples) {
  EXPECT_EQ(min_distance_exact(construct_code({Field::of_order(5), 1})).distance, 4);
  EXPECT_EQ(min_distance_exact(construct_code({Field::of_order(2), 1})).distance, 2);
  EXPECT_EQ(min_distance_exact(construct_code({Field::of_order(3), 1})).distance, 2);
}

TEST(CodeTest, DistanceLowerBoundAndPoles) {
  for (int q : {2, 3, 4, 5, 7, 8}) {
    for (int m = 1; 2 * m <= q; ++m) {
      if (upow(q, 2 * m + 1) > 40000) continue;
      const CodeParams params{Field::of_order(q), m};
      auto c = construct_code(params);
      const auto d = min_distance_exact(c);
      const auto ref = min_distance_reference(c);
      EXPECT_EQ(d.distance, ref.distance);
      EXPECT_EQ(d.first, ref.first);
      EXPECT_EQ(d.second, ref.second);
      EXPECT_GE(d.distance, q + 1 - 2 * m) << "q=" << q << " m=" << m;
      EXPECT_EQ(hamming_distance(c.word(d.first), c.word(d.second)), d.distance);
      EXPECT_LE(max_pole_count(c), m);
      EXPECT_GE(distance_to_allinf(c), q + 1 - m);
      EXPECT_TRUE(c.injective());
    }
  }
  auto c5 = construct_code({Field::of_order(5), 1});
  EXPECT_EQ(max_pole_count(c5), 1);
  EXPECT_GE(distance_to_allinf(c5), 5);
}

TEST(CodeTest, ConstantSubcodeHasNoPoles) {
  auto f = Field::of_order(5);
  Code::Builder b(f, 6, CodeKind::Imported);
  for (Elem a = 0; a < 5; ++a) b.add(phi(RatFun::from_poly(Poly::constant(f, a)), {f, 1}), std::nullopt);
  auto c = std::move(b).build();
  EXPECT_EQ(max_pole_count(c), 0);
  EXPECT_EQ(min_distance_exact(c).distance, 6);
}

TEST(CodeTest, AgreementSetAtMostTwoM) {
  std::mt19937_64 rng(3);
  for (auto [q, m] : {std::pair{5, 2}, std::pair{7, 2}, std::pair{9, 1}}) {
    const CodeParams params{Field::of_order(q), m};
    const auto fs = enumerate_Lm(params);
    for (int i = 0; i < 20000; ++i) {
      const auto& a = fs[rng() % fs.size()];
      const auto& b = fs[rng() % fs.size()];
      if (a == b) continue;
      const int agree = params.n() - hamming_distance(phi(a, params), phi(b, params));
      EXPECT_LE(agree, 2 * m);
    }
  }
}

TEST(CodeTest, WorkerCountDoesNotChangeResult) {
  auto c = construct_code({Field::of_order(7), 2});
  const auto one = min_distance_exact(c, {1, {}});
  const auto three = min_distance_exact(c, {3, {}});
  EXPECT_EQ(one.distance, three.distance);
  EXPECT_EQ(one.first, three.first);
  EXPECT_EQ(one.second, three.second);
}

TEST(CodeTest, PackedKernelMatchesScalar) {
  auto c = construct_code({Field::of_order(7), 2});
  std::mt19937_64 rng(42);
  for (int i = 0; i < 100000; ++i) {
    const std::size_t a = rng() % c.size();
    const std::size_t b = rng() % c.size();
    EXPECT_EQ(detail::packed_distance(c.row(a).data(), c.row(b).data(), c.stride()),
              hamming_distance(c.word(a), c.word(b)));
  }
}

TEST(CodeTest, SampledDistance) {
  auto c5 = construct_code({Field::of_order(5), 1});
  const auto exact = min_distance_exact(c5);
  const auto full = min_distance_sampled(c5, 1'000'000, 0);
  EXPECT_EQ(full.distance, exact.distance);
  const auto s = min_distance_sampled(c5, 10'000, 1);
  EXPECT_GE(s.distance, exact.distance);
  const auto one_a = min_distance_sampled(c5, 1, 9);
  const auto one_b = min_distance_sampled(c5, 1, 9);
  EXPECT_EQ(one_a.distance, one_b.distance);
  EXPECT_EQ(one_a.first, one_b.first);
  EXPECT_EQ(one_a.pairs, 1u);
}

TEST(CodeTest, AgCodeExamples) {
  auto f3 = Field::of_order(3);
  const auto pts3 = rational_points(*f3);
  auto c = ag_code(f3, pts3, Divisor::of(Place::finite(P(f3, {1, 0, 1}))));
  EXPECT_EQ(c.size(), 27u);
  EXPECT_EQ(min_distance_exact(c).distance, 2);

  auto f5 = Field::of_order(5);
  const auto& irr = irreducibles_up_to(f5, 2);
  const auto quad = *std::find_if(irr.begin(), irr.end(), [](const Poly& p) { return p.degree() == 2; });
  auto c5 = ag_code(f5, rational_points(*f5), Divisor::of(Place::finite(quad)));
  EXPECT_EQ(c5.size(), 125u);
  EXPECT_EQ(min_distance_exact(c5).distance, 4);

  auto rep = ag_code(f5, rational_points(*f5), Divisor());
  EXPECT_EQ(rep.size(), 5u);
  EXPECT_EQ(min_distance_exact(rep).distance, 6);
}

TEST(CodeTest, AgCodesAreMds) {
  std::mt19937_64 rng(8);
  for (int q : {3, 5, 7}) {
    auto f = Field::of_order(q);
    const auto pts = rational_points(*f);
    const auto& irr = irreducibles_up_to(f, 4);
    for (int trial = 0; trial < 6; ++trial) {
      // Random G from non-rational places plus, when evaluating at a
      // proper subset, the withheld rational places.
      std::vector<Symbol> eval(pts.begin(), pts.end());
      Divisor g;
      const int deg_target = 1 + static_cast<int>(rng() % 4);
      if (trial % 2 == 1) {
        g.add_term(Place::rational(f, eval.back()), 1);
        eval.pop_back();
      }
      int guard = 0;
      while (g.degree() < deg_target && guard++ < 50) {
        const auto& p = irr[rng() % irr.size()];
        if (p.degree() < 2 || g.degree() + p.degree().value() > deg_target) continue;
        g.add_term(Place::finite(p), 1);
      }
      const int n = static_cast<int>(eval.size());
      const int k = static_cast<int>(g.degree()) + 1;
      if (k > n - 1) continue;
      auto c = ag_code(f, eval, g);
      EXPECT_EQ(c.size(), upow(q, k));
      EXPECT_EQ(min_distance_exact(c).distance, n - k + 1) << "q=" << q << " G=" << g.to_string();
    }
  }
}

TEST(CodeTest, AgCodeRejectsBadInput) {
  auto f3 = Field::of_order(3);
  const std::vector<Symbol> dup = {Symbol::finite(0), Symbol::finite(0)};
  EXPECT_THROW(ag_code(f3, dup, Divisor()), std::invalid_argument);
  const auto pts = rational_points(*f3);
  EXPECT_THROW(ag_code(f3, pts, Divisor::of(Place::infinity())), std::invalid_argument);
  EXPECT_THROW(ag_code(f3, pts, Divisor::of(Place::finite(P(f3, {1, 0, 1})), -1)), std::invalid_argument);
}

TEST(CodeTest, MdsComparisonCodes) {
  for (auto [q, m] : {std::pair{3, 1}, std::pair{5, 1}, std::pair{5, 2}, std::pair{7, 2}}) {
    auto c = mds_comparison_code(Field::of_order(q), m);
    EXPECT_EQ(BigInt(c.size()), extension_size(q, m));
    EXPECT_EQ(min_distance_exact(c).distance, q + 1 - 2 * m);
  }
  EXPECT_EQ(mds_comparison_code(Field::of_order(9), 2).size(), 59049u);
  EXPECT_THROW(mds_comparison_code(Field::of_order(4), 2), std::invalid_argument);
}

TEST(CodeTest, Decode) {
  auto f5 = Field::of_order(5);
  auto c = construct_code({f5, 1});
  std::mt19937_64 rng(5);
  for (int i = 0; i < 200; ++i) {
    const std::size_t row = rng() % c.size();
    const Codeword w = c.word(row);
    const auto exact = decode_nearest(c, w);
    EXPECT_EQ(exact.index, row);
    EXPECT_EQ(exact.distance, 0);
    EXPECT_FALSE(exact.tie);

    std::vector<Symbol> s = w.symbols();
    const std::size_t pos = rng() % s.size();
    const Elem shift = 1 + rng() % 5;  // 1..5 over 6 symbols: never the same one
    const std::uint32_t cur = s[pos].is_inf() ? 5 : s[pos].value();
    const std::uint32_t next = (cur + shift) % 6;
    s[pos] = next == 5 ? Symbol::inf() : Symbol::finite(next);
    const auto fixed = decode_nearest(c, Codeword(s));
    EXPECT_EQ(fixed.index, row);
    EXPECT_EQ(fixed.distance, 1);
    EXPECT_FALSE(fixed.tie);
  }

  // Halfway between two words at distance 2 in C_1 over F_2.
  auto c2 = construct_code({Field::of_order(2), 1});
  const auto d = min_distance_exact(c2);
  std::vector<Symbol> mid = c2.word(d.first).symbols();
  const auto other = c2.word(d.second);
  for (std::size_t i = 0; i < mid.size(); ++i) {
    if (mid[i] != other[i]) {
      mid[i] = other[i];
      break;
    }
  }
  const auto tied = decode_nearest(c2, Codeword(mid));
  EXPECT_TRUE(tied.tie);
  EXPECT_EQ(tied.distance, 1);
  EXPECT_EQ(decode_nearest(c2, Codeword(mid)).index, tied.index);
}

TEST(CodeTest, JsonRoundTrip) {
  auto c = construct_code({Field::of_order(4), 1});
  auto back = code_from_json(nlohmann::json::parse(code_to_json(c).dump()));
  ASSERT_EQ(back.size(), c.size());
  for (std::size_t i = 0; i < c.size(); ++i) EXPECT_EQ(back.word(i), c.word(i));
  EXPECT_EQ(min_distance_exact(back).distance, min_distance_exact(c).distance);
}

TEST(CodeTest, CsvLayout) {
  auto csv = code_to_csv(construct_code({Field::of_order(2), 1}));
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "P_0,P_1,P_inf");
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 10);
}

TEST(VerifyTest, SmallestInstanceDiscrepancies) {
  auto r = verify_code({Field::of_order(2), 1});
  EXPECT_EQ(r.measured_d, 2);
  EXPECT_EQ(r.claimed_d, 1);
  EXPECT_EQ(r.measured_size, 9u);
  EXPECT_EQ(r.claimed_size, 10);
  EXPECT_FALSE(r.discrepancies.empty());
  EXPECT_TRUE(r.invariants_hold());
}

TEST(VerifyTest, FlagsTableSizeAtFiveOne) {
  auto r = verify_code({Field::of_order(5), 1});
  EXPECT_EQ(r.measured_d, 4);
  EXPECT_EQ(r.measured_size, 126u);
  EXPECT_EQ(r.claimed_size, 142);
  const bool flagged = std::any_of(r.discrepancies.begin(), r.discrepancies.end(),
                                   [](const std::string& s) { return s.find("142") != std::string::npos; });
  EXPECT_TRUE(flagged);
  EXPECT_TRUE(r.invariants_hold());
  EXPECT_TRUE(r.size_forces_distance);
}

TEST(VerifyTest, SampledModeSkipsSingleton) {
  VerifyOptions opts;
  opts.mode = DistanceMode::Sampled;
  opts.budget = 500;
  opts.seed = 3;
  auto r = verify_code({Field::of_order(5), 2}, opts);
  EXPECT_FALSE(r.singleton_holds.has_value());
  EXPECT_GE(r.measured_d, 2);
  EXPECT_EQ(r.pairs_examined, 500u);
}

}  // namespace
}  // namespace ratcode
