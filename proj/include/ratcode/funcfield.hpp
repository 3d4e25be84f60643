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
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ratcode/gf.hpp"
#include "ratcode/poly.hpp"

namespace ratcode {

/// Element of Sigma = F_q u {inf}. Used both as an evaluation value and as a
/// tag for the q + 1 rational places (finite alpha for P_alpha, inf for
/// P_infinity). Finite symbols order before inf.
class Symbol {
 public:
  /// The finite symbol 0.
  constexpr Symbol() : raw_(0) {}
  static constexpr Symbol inf() { return Symbol(kInf); }
  static constexpr Symbol finite(Elem a) { return Symbol(a); }

  constexpr bool is_inf() const { return raw_ == kInf; }
  constexpr bool is_finite() const { return raw_ != kInf; }
  Elem value() const;

  friend constexpr auto operator<=>(Symbol, Symbol) = default;

  /// Encoding or "inf".
  std::string to_string() const;

 private:
  static constexpr std::uint32_t kInf = std::numeric_limits<std::uint32_t>::max();
  constexpr explicit Symbol(std::uint32_t raw) : raw_(raw) {}
  std::uint32_t raw_;
};

using EvalValue = Symbol;

/// A place of F_q(x): a monic irreducible polynomial or the infinite place.
/// Finite places order by their polynomial; infinity sorts last.
class Place {
 public:
  /// `p` must be monic irreducible (checked).
  static Place finite(Poly p);
  static Place infinity() { return Place(); }
  /// P_alpha for finite alpha, P_infinity for inf.
  static Place rational(const FieldPtr& field, Symbol alpha);

  bool is_infinite() const { return !poly_.has_value(); }
  /// Throws std::logic_error on the infinite place.
  const Poly& poly() const;
  int degree() const { return is_infinite() ? 1 : poly_->degree().value(); }
  /// The Sigma tag of a degree-one place, nullopt otherwise.
  std::optional<Symbol> as_rational() const;

  friend bool operator==(const Place& a, const Place& b);
  friend std::strong_ordering operator<=>(const Place& a, const Place& b);

  std::string to_string() const;

 private:
  friend class RatFun;
  Place() = default;
  explicit Place(Poly p) : poly_(std::move(p)) {}
  std::optional<Poly> poly_;
};

/// Finitely supported integer combination of places. Zero coefficients are
/// never stored.
class Divisor {
 public:
  Divisor() = default;
  static Divisor of(const Place& p, std::int64_t n = 1);

  std::int64_t coeff(const Place& p) const;
  void add_term(const Place& p, std::int64_t n);

  const std::map<Place, std::int64_t>& terms() const { return terms_; }
  std::vector<Place> support() const;
  bool empty() const { return terms_.empty(); }

  std::int64_t degree() const;
  bool is_effective() const;

  friend Divisor operator+(const Divisor& a, const Divisor& b);
  friend Divisor operator-(const Divisor& a, const Divisor& b);
  friend bool operator==(const Divisor& a, const Divisor& b) = default;
  /// Pointwise comparison: a <= b iff b - a is effective.
  friend bool leq(const Divisor& a, const Divisor& b);

  std::string to_string() const;

 private:
  std::map<Place, std::int64_t> terms_;
};

/// Pointwise max.
Divisor join(const Divisor& a, const Divisor& b);
/// Pointwise min.
Divisor meet(const Divisor& a, const Divisor& b);

/// Element of F_q(x), always kept as num/den with gcd(num, den) = 1 and den
/// monic. Zero is 0/1. Equality of canonical forms is equality in the field.
class RatFun {
 public:
  /// Canonicalizes g/h. Throws DivisionByZero when h is zero.
  static RatFun make(const Poly& g, const Poly& h);
  static RatFun from_poly(const Poly& g) { return make(g, Poly::one(g.field_ptr())); }
  static RatFun zero(const FieldPtr& field) { return from_poly(Poly::zero(field)); }

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  const Field& field() const { return num_.field(); }
  const FieldPtr& field_ptr() const { return num_.field_ptr(); }
  bool is_zero() const { return num_.is_zero(); }

  /// max(deg num, deg den); the degree of the pole divisor for nonzero f.
  int height() const;

  /// Residue class at a rational place: g(a)/h(a) or inf when h(a) = 0; at
  /// infinity the ratio of leading coefficients, 0 or inf depending on
  /// whether deg g equals, is below or exceeds deg h.
  EvalValue evaluate(Symbol point) const;

  /// Normalized discrete valuation. Throws DivisionByZero for the zero
  /// function.
  std::int64_t valuation(const Place& p) const;

  Divisor zero_divisor() const;
  Divisor pole_divisor() const;
  Divisor principal_divisor() const;

  RatFun operator-() const;
  friend RatFun operator+(const RatFun& a, const RatFun& b);
  friend RatFun operator-(const RatFun& a, const RatFun& b);
  friend RatFun operator*(const RatFun& a, const RatFun& b);
  friend RatFun operator/(const RatFun& a, const RatFun& b);

  friend bool operator==(const RatFun& a, const RatFun& b) = default;
  friend auto operator<=>(const RatFun& a, const RatFun& b) {
    if (auto c = a.den_ <=> b.den_; c != 0) return c;
    return a.num_ <=> b.num_;
  }

  /// "(g)/(h)" with coefficient encodings.
  std::string to_string() const;

 private:
  RatFun(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {}
  Poly num_;
  Poly den_;
};

/// f = 0 or (f) + D >= 0.
bool rr_member(const RatFun& f, const Divisor& d);

/// Basis { x^j / prod p_i^{n_i} : 0 <= j <= deg G } of L(G) for effective G,
/// where the product runs over the finite part of G. Throws
/// std::invalid_argument on a non-effective divisor.
std::vector<RatFun> rr_basis(const FieldPtr& field, const Divisor& g);

/// The q + 1 rational place tags in coordinate order: alpha_1..alpha_q
/// ascending by encoding, then inf.
std::vector<Symbol> rational_points(const Field& field);

}  // namespace ratcode
