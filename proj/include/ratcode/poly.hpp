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
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "ratcode/gf.hpp"

namespace ratcode {

/// Polynomial degree with a distinct value for the zero polynomial that
/// behaves like negative infinity: smaller than every integer degree and
/// absorbing under addition. value() refuses to expose it as an integer.
class Degree {
 public:
  static constexpr Degree neg_inf() { return Degree(kNegInf, Tag{}); }
  constexpr explicit Degree(int d) : raw_(d) {}

  constexpr bool is_neg_inf() const { return raw_ == kNegInf; }
  int value() const;

  friend constexpr auto operator<=>(Degree, Degree) = default;
  friend constexpr bool operator==(Degree, Degree) = default;
  friend constexpr auto operator<=>(Degree a, int b) { return a.raw_ <=> b; }
  friend constexpr bool operator==(Degree a, int b) { return a.raw_ == b; }

  friend constexpr Degree operator+(Degree a, Degree b) {
    if (a.is_neg_inf() || b.is_neg_inf()) return neg_inf();
    return Degree(a.raw_ + b.raw_);
  }

 private:
  struct Tag {};
  static constexpr int kNegInf = std::numeric_limits<int>::min();
  constexpr Degree(int raw, Tag) : raw_(raw) {}
  int raw_;
};

/// Dense univariate polynomial over a finite field: coefficients lowest
/// degree first, never with a trailing zero. The zero polynomial has no
/// coefficients.
class Poly {
 public:
  Poly(FieldPtr field, std::vector<Elem> coeffs);

  static Poly zero(FieldPtr field) { return Poly(std::move(field), {}); }
  static Poly constant(FieldPtr field, Elem c) { return Poly(std::move(field), {c}); }
  static Poly one(FieldPtr field) { return constant(std::move(field), 1); }
  static Poly monomial(FieldPtr field, Elem c, int degree);
  static Poly x(FieldPtr field) { return monomial(std::move(field), 1, 1); }
  /// x - alpha
  static Poly linear(FieldPtr field, Elem alpha);
  /// Inverse of encoding(): coefficient i is digit i of `code` in base q.
  static Poly from_encoding(FieldPtr field, std::uint64_t code);

  const Field& field() const { return *field_; }
  const FieldPtr& field_ptr() const { return field_; }
  const std::vector<Elem>& coeffs() const { return coeffs_; }

  bool is_zero() const { return coeffs_.empty(); }
  bool is_monic() const { return !is_zero() && coeffs_.back() == 1; }
  Degree degree() const;
  /// 0 for the zero polynomial.
  Elem leading_coeff() const { return is_zero() ? 0 : coeffs_.back(); }
  Elem coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : 0; }

  /// sum(c_i * q^i). Ascending encoding within a fixed degree agrees with
  /// the ordering below.
  std::uint64_t encoding() const;

  Elem eval(Elem x0) const;

  /// Monic associate and the scalar that was factored out:
  /// a == scalar * monic. Throws std::invalid_argument on zero.
  std::pair<Poly, Elem> monicize() const;

  Poly operator-() const;
  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly scaled(Elem c) const;
  Poly shifted(int k) const;  // multiply by x^k

  /// Equal fields and equal coefficients.
  friend bool operator==(const Poly& a, const Poly& b);
  /// Orders by degree, then by coefficients from the top down (the
  /// (degree, encoding) order).
  friend std::strong_ordering operator<=>(const Poly& a, const Poly& b);

  std::string to_string(char var = 'x') const;

 private:
  void trim();

  FieldPtr field_;
  std::vector<Elem> coeffs_;
};

struct DivRem {
  Poly quotient;
  Poly remainder;
};

/// a = quotient * b + remainder with degree(remainder) < degree(b).
/// Throws DivisionByZero when b is zero.
DivRem divrem(const Poly& a, const Poly& b);

/// Monic gcd by Euclid. Throws std::invalid_argument if both are zero.
Poly gcd(const Poly& a, const Poly& b);

/// a divides b with zero remainder.
bool divides(const Poly& a, const Poly& b);

/// All monic irreducibles of degree 1..dmax, sorted by (degree, encoding).
/// Built by sieving and cached per field.
const std::vector<Poly>& irreducibles_up_to(const FieldPtr& field, int dmax);

struct Factorization {
  Elem unit = 1;
  /// Distinct monic irreducibles in ascending order with multiplicities.
  std::vector<std::pair<Poly, int>> factors;

  Poly expand(const FieldPtr& field) const;
};

/// Trial division over the sieved irreducible table. Throws
/// std::invalid_argument on the zero polynomial.
Factorization factor(const Poly& a);

/// Largest e with p^e | a. `p` must be non-constant; `a` nonzero.
int multiplicity(const Poly& p, const Poly& a);

}  // namespace ratcode
