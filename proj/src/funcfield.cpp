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

#include "ratcode/funcfield.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "ratcode/error.hpp"

namespace ratcode {

Elem Symbol::value() const {
  if (is_inf()) throw std::logic_error("symbol: inf has no field value");
  return raw_;
}

std::string Symbol::to_string() const { return is_inf() ? "inf" : std::to_string(raw_); }

// ---------------------------------------------------------------- Place

Place Place::finite(Poly p) {
  if (!p.is_monic() || p.degree() < 1) throw std::invalid_argument("place: polynomial must be monic, degree >= 1");
  const auto f = factor(p);
  if (f.factors.size() != 1 || f.factors.front().second != 1) {
    throw std::invalid_argument("place: polynomial " + p.to_string() + " is not irreducible");
  }
  return Place(std::move(p));
}

Place Place::rational(const FieldPtr& field, Symbol alpha) {
  if (alpha.is_inf()) return infinity();
  return Place(Poly::linear(field, alpha.value()));
}

const Poly& Place::poly() const {
  if (!poly_) throw std::logic_error("place: the infinite place has no polynomial");
  return *poly_;
}

std::optional<Symbol> Place::as_rational() const {
  if (is_infinite()) return Symbol::inf();
  if (poly_->degree() != 1) return std::nullopt;
  return Symbol::finite(poly_->field().neg(poly_->coeff(0)));
}

bool operator==(const Place& a, const Place& b) { return a.poly_ == b.poly_; }

std::strong_ordering operator<=>(const Place& a, const Place& b) {
  if (a.is_infinite() || b.is_infinite()) {
    return static_cast<int>(a.is_infinite()) <=> static_cast<int>(b.is_infinite());
  }
  return *a.poly_ <=> *b.poly_;
}

std::string Place::to_string() const {
  if (is_infinite()) return "P[inf]";
  return "P[" + poly_->to_string() + "]";
}

// ---------------------------------------------------------------- Divisor

Divisor Divisor::of(const Place& p, std::int64_t n) {
  Divisor d;
  d.add_term(p, n);
  return d;
}

std::int64_t Divisor::coeff(const Place& p) const {
  auto it = terms_.find(p);
  return it == terms_.end() ? 0 : it->second;
}

void Divisor::add_term(const Place& p, std::int64_t n) {
  if (n == 0) return;
  auto [it, inserted] = terms_.try_emplace(p, n);
  if (!inserted) {
    it->second += n;
    if (it->second == 0) terms_.erase(it);
  }
}

std::vector<Place> Divisor::support() const {
  std::vector<Place> out;
  out.reserve(terms_.size());
  for (const auto& [p, n] : terms_) out.push_back(p);
  return out;
}

std::int64_t Divisor::degree() const {
  std::int64_t d = 0;
  for (const auto& [p, n] : terms_) d += n * p.degree();
  return d;
}

bool Divisor::is_effective() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.second > 0; });
}

Divisor operator+(const Divisor& a, const Divisor& b) {
  Divisor r = a;
  for (const auto& [p, n] : b.terms_) r.add_term(p, n);
  return r;
}

Divisor operator-(const Divisor& a, const Divisor& b) {
  Divisor r = a;
  for (const auto& [p, n] : b.terms_) r.add_term(p, -n);
  return r;
}

bool leq(const Divisor& a, const Divisor& b) { return (b - a).is_effective(); }

namespace {

template <class Pick>
Divisor pointwise(const Divisor& a, const Divisor& b, Pick pick) {
  Divisor r;
  for (const auto& [p, n] : a.terms()) r.add_term(p, pick(n, b.coeff(p)));
  for (const auto& [p, n] : b.terms()) {
    if (a.coeff(p) == 0) r.add_term(p, pick(std::int64_t{0}, n));
  }
  return r;
}

}  // namespace

Divisor join(const Divisor& a, const Divisor& b) {
  return pointwise(a, b, [](std::int64_t x, std::int64_t y) { return std::max(x, y); });
}

Divisor meet(const Divisor& a, const Divisor& b) {
  return pointwise(a, b, [](std::int64_t x, std::int64_t y) { return std::min(x, y); });
}

std::string Divisor::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [p, n] : terms_) {
    if (!first) os << (n < 0 ? " - " : " + ");
    else if (n < 0) os << "-";
    first = false;
    const auto mag = n < 0 ? -n : n;
    if (mag != 1) os << mag << "*";
    os << p.to_string();
  }
  return os.str();
}

// ---------------------------------------------------------------- RatFun

RatFun RatFun::make(const Poly& g, const Poly& h) {
  if (h.is_zero()) throw DivisionByZero("ratfun: zero denominator");
  if (g.is_zero()) return RatFun(g, Poly::one(h.field_ptr()));
  const Poly d = gcd(g, h);
  Poly num = divrem(g, d).quotient;
  auto [den, lc] = divrem(h, d).quotient.monicize();
  num = num.scaled(num.field().inv(lc));
  return RatFun(std::move(num), std::move(den));
}

int RatFun::height() const {
  const int dn = num_.is_zero() ? 0 : num_.degree().value();
  return std::max(dn, den_.degree().value());
}

EvalValue RatFun::evaluate(Symbol point) const {
  const Field& f = field();
  if (point.is_finite()) {
    const Elem alpha = point.value();
    if (!f.contains(alpha)) throw std::out_of_range("evaluate: point outside the field");
    const Elem h = den_.eval(alpha);
    if (h == 0) return EvalValue::inf();
    return EvalValue::finite(f.div(num_.eval(alpha), h));
  }
  const Degree dg = num_.degree();
  const Degree dh = den_.degree();
  if (dg == dh) return EvalValue::finite(f.div(num_.leading_coeff(), den_.leading_coeff()));
  if (dg < dh) return EvalValue::finite(0);
  return EvalValue::inf();
}

std::int64_t RatFun::valuation(const Place& p) const {
  if (is_zero()) throw DivisionByZero("valuation of the zero function");
  if (p.is_infinite()) return den_.degree().value() - num_.degree().value();
  return multiplicity(p.poly(), num_) - multiplicity(p.poly(), den_);
}

Divisor RatFun::zero_divisor() const {
  if (is_zero()) throw DivisionByZero("zero divisor of the zero function");
  Divisor d;
  for (const auto& [p, e] : factor(num_).factors) d.add_term(Place(p), e);
  const std::int64_t at_inf = valuation(Place::infinity());
  if (at_inf > 0) d.add_term(Place::infinity(), at_inf);
  return d;
}

Divisor RatFun::pole_divisor() const {
  if (is_zero()) throw DivisionByZero("pole divisor of the zero function");
  Divisor d;
  if (den_.degree() >= 1) {
    for (const auto& [p, e] : factor(den_).factors) d.add_term(Place(p), e);
  }
  const std::int64_t at_inf = valuation(Place::infinity());
  if (at_inf < 0) d.add_term(Place::infinity(), -at_inf);
  return d;
}

Divisor RatFun::principal_divisor() const { return zero_divisor() - pole_divisor(); }

RatFun RatFun::operator-() const { return RatFun(-num_, den_); }

RatFun operator+(const RatFun& a, const RatFun& b) {
  return RatFun::make(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFun operator-(const RatFun& a, const RatFun& b) {
  return RatFun::make(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RatFun operator*(const RatFun& a, const RatFun& b) { return RatFun::make(a.num_ * b.num_, a.den_ * b.den_); }

RatFun operator/(const RatFun& a, const RatFun& b) {
  if (b.is_zero()) throw DivisionByZero("ratfun: division by the zero function");
  return RatFun::make(a.num_ * b.den_, a.den_ * b.num_);
}

std::string RatFun::to_string() const { return "(" + num_.to_string() + ")/(" + den_.to_string() + ")"; }

// ---------------------------------------------------------------- L(G)

bool rr_member(const RatFun& f, const Divisor& d) {
  if (f.is_zero()) return true;
  return (f.principal_divisor() + d).is_effective();
}

std::vector<RatFun> rr_basis(const FieldPtr& field, const Divisor& g) {
  if (!g.is_effective()) throw std::invalid_argument("rr_basis: divisor is not effective");
  Poly den = Poly::one(field);
  for (const auto& [p, n] : g.terms()) {
    if (p.is_infinite()) continue;
    for (std::int64_t i = 0; i < n; ++i) den = den * p.poly();
  }
  const std::int64_t deg = g.degree();
  std::vector<RatFun> basis;
  basis.reserve(static_cast<std::size_t>(deg) + 1);
  for (std::int64_t j = 0; j <= deg; ++j) {
    basis.push_back(RatFun::make(Poly::monomial(field, 1, static_cast<int>(j)), den));
  }
  return basis;
}

std::vector<Symbol> rational_points(const Field& field) {
  std::vector<Symbol> pts;
  pts.reserve(field.q() + 1);
  for (Elem a : field.elements()) pts.push_back(Symbol::finite(a));
  pts.push_back(Symbol::inf());
  return pts;
}

}  // namespace ratcode
