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

#include <random>
#include <set>

#include "ratcode/error.hpp"
#include "ratcode/poly.hpp"

namespace ratcode {
namespace {

Poly P(const FieldPtr& f, std::vector<Elem> c) { return Poly(f, std::move(c)); }

Poly random_poly(const FieldPtr& f, int deg, std::mt19937_64& rng) {
  std::vector<Elem> c(deg + 1);
  for (auto& x : c) x = rng() % f->q();
  if (c.back() == 0) c.back() = 1;
  return Poly(f, c);
}

TEST(PolyTest, Degree) {
  auto f = Field::of_order(5);
  EXPECT_TRUE(Poly::zero(f).degree().is_neg_inf());
  EXPECT_TRUE(Poly::zero(f).degree() < 0);
  EXPECT_EQ(Poly::one(f).degree(), 0);
  EXPECT_EQ(P(f, {1, 2, 0, 0}).degree(), 1);
  EXPECT_TRUE((Poly::zero(f).degree() + Degree(4)).is_neg_inf());
  EXPECT_THROW(Poly::zero(f).degree().value(), std::logic_error);
}

TEST(PolyTest, ArithmeticExamples) {
  auto f2 = Field::of_order(2);
  EXPECT_EQ(P(f2, {1, 1}) * P(f2, {1, 1}), P(f2, {1, 0, 1}));

  auto f5 = Field::of_order(5);
  EXPECT_EQ(P(f5, {1, 2}).eval(3), 2u);
  auto [monic, scalar] = P(f5, {1, 0, 3}).monicize();
  EXPECT_EQ(monic, P(f5, {2, 0, 1}));
  EXPECT_EQ(scalar, 3u);
  EXPECT_THROW(Poly::zero(f5).monicize(), std::invalid_argument);
  EXPECT_EQ(P(f5, {1, 2}) - P(f5, {1, 2}), Poly::zero(f5));
  EXPECT_EQ(P(f5, {3, 4, 1}).to_string(), "x^2+4x+3");
}

TEST(PolyTest, DivRemExamples) {
  auto f3 = Field::of_order(3);
  auto [q1, r1] = divrem(P(f3, {1, 0, 1}), P(f3, {1, 1}));
  EXPECT_EQ(q1, P(f3, {2, 1}));
  EXPECT_EQ(r1, P(f3, {2}));

  auto x = Poly::x(f3);
  auto x2 = Poly::monomial(f3, 1, 2);
  auto [q2, r2] = divrem(x, x2);
  EXPECT_TRUE(q2.is_zero());
  EXPECT_EQ(r2, x);
  auto [q3, r3] = divrem(x2, x);
  EXPECT_EQ(q3, x);
  EXPECT_TRUE(r3.is_zero());
  EXPECT_THROW(divrem(x, Poly::zero(f3)), DivisionByZero);
}

TEST(PolyTest, GcdExamples) {
  auto f5 = Field::of_order(5);
  EXPECT_EQ(gcd(P(f5, {4, 0, 1}), P(f5, {4, 1})), P(f5, {4, 1}));
  auto f2 = Field::of_order(2);
  EXPECT_EQ(gcd(Poly::x(f2), P(f2, {1, 1})), Poly::one(f2));
  auto a = P(f5, {2, 3, 3});
  EXPECT_EQ(gcd(a, Poly::zero(f5)), a.monicize().first);
  EXPECT_THROW(gcd(Poly::zero(f5), Poly::zero(f5)), std::invalid_argument);
}

TEST(PolyTest, IrreducibleTables) {
  auto f2 = Field::of_order(2);
  const auto& t2 = irreducibles_up_to(f2, 2);
  ASSERT_EQ(t2.size(), 3u);
  EXPECT_EQ(t2[0], Poly::x(f2));
  EXPECT_EQ(t2[1], P(f2, {1, 1}));
  EXPECT_EQ(t2[2], P(f2, {1, 1, 1}));

  auto f3 = Field::of_order(3);
  const auto& t3 = irreducibles_up_to(f3, 1);
  ASSERT_EQ(t3.size(), 3u);
  EXPECT_EQ(t3[2], P(f3, {2, 1}));
}

TEST(PolyTest, QuadraticIrreducibleCount) {
  for (int q : {2, 3, 4, 5, 7, 8, 9, 11, 13}) {
    auto f = Field::of_order(q);
    int deg2 = 0;
    for (const auto& p : irreducibles_up_to(f, 2)) deg2 += p.degree() == 2;
    EXPECT_EQ(deg2, (q * q - q) / 2) << "q=" << q;

    // Rootless monic quadratics, counted directly.
    int rootless = 0;
    for (Elem b = 0; b < f->q(); ++b)
      for (Elem c = 0; c < f->q(); ++c) {
        bool root = false;
        for (Elem a = 0; a < f->q() && !root; ++a) root = P(f, {c, b, 1}).eval(a) == 0;
        rootless += !root;
      }
    EXPECT_EQ(deg2, rootless);
  }
}

TEST(PolyTest, CubicIrreducibleCountMatchesNecklaces) {
  // (q^3 - q) / 3 monic irreducible cubics.
  for (int q : {2, 3, 4, 5}) {
    auto f = Field::of_order(q);
    int deg3 = 0;
    for (const auto& p : irreducibles_up_to(f, 3)) deg3 += p.degree() == 3;
    EXPECT_EQ(deg3, (q * q * q - q) / 3);
  }
}

TEST(PolyTest, FactorExamples) {
  auto f2 = Field::of_order(2);
  auto fx = factor(P(f2, {0, 1, 1}));
  ASSERT_EQ(fx.factors.size(), 2u);
  EXPECT_EQ(fx.factors[0], std::make_pair(Poly::x(f2), 1));
  EXPECT_EQ(fx.factors[1], std::make_pair(P(f2, {1, 1}), 1));

  auto sq = factor(P(f2, {1, 0, 1}));
  ASSERT_EQ(sq.factors.size(), 1u);
  EXPECT_EQ(sq.factors[0], std::make_pair(P(f2, {1, 1}), 2));

  auto f3 = Field::of_order(3);
  auto irr = factor(P(f3, {1, 0, 1}));
  ASSERT_EQ(irr.factors.size(), 1u);
  EXPECT_EQ(irr.factors[0].second, 1);

  auto f5 = Field::of_order(5);
  auto withunit = factor(P(f5, {0, 3}));
  EXPECT_EQ(withunit.unit, 3u);
  EXPECT_EQ(withunit.expand(f5), P(f5, {0, 3}));
  EXPECT_THROW(factor(Poly::zero(f5)), std::invalid_argument);
}

TEST(PolyTest, RandomizedDivRemGcdFactor) {
  std::mt19937_64 rng(7);
  for (int q : {2, 3, 4, 5, 7, 9}) {
    auto f = Field::of_order(q);
    for (int it = 0; it < 300; ++it) {
      auto a = random_poly(f, rng() % 7, rng);
      auto b = random_poly(f, rng() % 5, rng);
      auto [qq, rr] = divrem(a, b);
      EXPECT_EQ(qq * b + rr, a);
      EXPECT_TRUE(rr.degree() < b.degree());

      auto g = gcd(a, b);
      EXPECT_TRUE(g.is_monic());
      EXPECT_TRUE(divides(g, a));
      EXPECT_TRUE(divides(g, b));
      // Common multiple test: gcd(a c, b c) = gcd(a, b) monic(c).
      auto c = random_poly(f, 1 + rng() % 2, rng);
      EXPECT_EQ(gcd(a * c, b * c), g * c.monicize().first);

      auto fa = factor(a);
      EXPECT_EQ(fa.expand(f), a);
      for (const auto& [p, e] : fa.factors) {
        EXPECT_TRUE(p.is_monic());
        EXPECT_EQ(factor(p).factors.size(), 1u);
        EXPECT_EQ(multiplicity(p, a), e);
      }
      EXPECT_TRUE(std::is_sorted(fa.factors.begin(), fa.factors.end()));
    }
  }
}

TEST(PolyTest, EncodingOrder) {
  auto f = Field::of_order(3);
  std::set<Poly> polys;
  for (std::uint64_t e = 0; e < 81; ++e) {
    auto p = Poly::from_encoding(f, e);
    EXPECT_EQ(p.encoding(), e);
    polys.insert(p);
  }
  std::uint64_t prev = 0;
  bool first = true;
  for (const auto& p : polys) {
    if (!first) {
      EXPECT_LT(prev, p.encoding());
    }
    prev = p.encoding();
    first = false;
  }
}

TEST(PolyTest, MixedFieldsRejected) {
  auto f5 = Field::of_order(5);
  auto f7 = Field::of_order(7);
  EXPECT_THROW(Poly::x(f5) + Poly::x(f7), std::invalid_argument);
}

}  // namespace
}  // namespace ratcode
