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

#include "ratcode/poly.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "ratcode/error.hpp"

namespace ratcode {

int Degree::value() const {
  if (is_neg_inf()) throw std::logic_error("degree of the zero polynomial has no integer value");
  return raw_;
}

namespace {

const Field& common_field(const Poly& a, const Poly& b) {
  if (a.field_ptr() != b.field_ptr() && !(a.field() == b.field())) {
    throw std::invalid_argument("polynomials over different fields");
  }
  return a.field();
}

}  // namespace

Poly::Poly(FieldPtr field, std::vector<Elem> coeffs) : field_(std::move(field)), coeffs_(std::move(coeffs)) {
  if (!field_) throw std::invalid_argument("poly: null field");
  for (Elem c : coeffs_) {
    if (!field_->contains(c)) throw std::out_of_range("poly: coefficient out of range");
  }
  trim();
}

Poly Poly::monomial(FieldPtr field, Elem c, int degree) {
  if (degree < 0) throw std::invalid_argument("poly: negative monomial degree");
  std::vector<Elem> v(static_cast<std::size_t>(degree) + 1, 0);
  v.back() = c;
  return Poly(std::move(field), std::move(v));
}

Poly Poly::linear(FieldPtr field, Elem alpha) {
  const Elem c = field->neg(alpha);
  return Poly(std::move(field), {c, 1});
}

Poly Poly::from_encoding(FieldPtr field, std::uint64_t code) {
  const std::uint64_t q = field->q();
  std::vector<Elem> v;
  while (code > 0) {
    v.push_back(static_cast<Elem>(code % q));
    code /= q;
  }
  return Poly(std::move(field), std::move(v));
}

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Degree Poly::degree() const {
  if (coeffs_.empty()) return Degree::neg_inf();
  return Degree(static_cast<int>(coeffs_.size()) - 1);
}

std::uint64_t Poly::encoding() const {
  std::uint64_t code = 0;
  const std::uint64_t q = field_->q();
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    if (code > (std::numeric_limits<std::uint64_t>::max() - coeffs_[i]) / q) {
      throw std::overflow_error("poly: encoding does not fit in 64 bits");
    }
    code = code * q + coeffs_[i];
  }
  return code;
}

Elem Poly::eval(Elem x0) const {
  const Field& f = *field_;
  Elem acc = 0;
  for (std::size_t i = coeffs_.size(); i-- > 0;) acc = f.add(f.mul(acc, x0), coeffs_[i]);
  return acc;
}

std::pair<Poly, Elem> Poly::monicize() const {
  if (is_zero()) throw std::invalid_argument("monicize: zero polynomial");
  const Elem lc = leading_coeff();
  return {scaled(field_->inv(lc)), lc};
}

Poly Poly::operator-() const {
  std::vector<Elem> v(coeffs_.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = field_->neg(coeffs_[i]);
  return Poly(field_, std::move(v));
}

Poly operator+(const Poly& a, const Poly& b) {
  const Field& f = common_field(a, b);
  std::vector<Elem> v(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = f.add(a.coeff(i), b.coeff(i));
  return Poly(a.field_, std::move(v));
}

Poly operator-(const Poly& a, const Poly& b) {
  const Field& f = common_field(a, b);
  std::vector<Elem> v(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = f.sub(a.coeff(i), b.coeff(i));
  return Poly(a.field_, std::move(v));
}

Poly operator*(const Poly& a, const Poly& b) {
  const Field& f = common_field(a, b);
  if (a.is_zero() || b.is_zero()) return Poly::zero(a.field_);
  std::vector<Elem> v(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      v[i + j] = f.add(v[i + j], f.mul(a.coeffs_[i], b.coeffs_[j]));
    }
  }
  return Poly(a.field_, std::move(v));
}

Poly Poly::scaled(Elem c) const {
  std::vector<Elem> v(coeffs_.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = field_->mul(coeffs_[i], c);
  return Poly(field_, std::move(v));
}

Poly Poly::shifted(int k) const {
  if (k < 0) throw std::invalid_argument("poly: negative shift");
  if (is_zero()) return *this;
  std::vector<Elem> v(static_cast<std::size_t>(k), 0);
  v.insert(v.end(), coeffs_.begin(), coeffs_.end());
  return Poly(field_, std::move(v));
}

bool operator==(const Poly& a, const Poly& b) {
  if (a.field_ != b.field_ && !(*a.field_ == *b.field_)) return false;
  return a.coeffs_ == b.coeffs_;
}

std::strong_ordering operator<=>(const Poly& a, const Poly& b) {
  if (a.coeffs_.size() != b.coeffs_.size()) return a.coeffs_.size() <=> b.coeffs_.size();
  for (std::size_t i = a.coeffs_.size(); i-- > 0;) {
    if (a.coeffs_[i] != b.coeffs_[i]) return a.coeffs_[i] <=> b.coeffs_[i];
  }
  return std::strong_ordering::equal;
}

std::string Poly::to_string(char var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    const Elem c = coeffs_[i];
    if (c == 0) continue;
    if (!first) os << '+';
    first = false;
    if (i == 0 || c != 1) os << c;
    if (i >= 1) os << var;
    if (i >= 2) os << '^' << i;
  }
  return os.str();
}

DivRem divrem(const Poly& a, const Poly& b) {
  const Field& f = common_field(a, b);
  if (b.is_zero()) throw DivisionByZero("divrem: division by the zero polynomial");
  const auto& bc = b.coeffs();
  if (a.coeffs().size() < bc.size()) return {Poly::zero(a.field_ptr()), a};
  std::vector<Elem> r = a.coeffs();
  const std::size_t db = bc.size() - 1;
  std::vector<Elem> qv(r.size() - db, 0);
  const Elem lead_inv = f.inv(bc.back());
  for (std::size_t top = r.size(); top-- > db;) {
    const Elem c = f.mul(r[top], lead_inv);
    qv[top - db] = c;
    if (c == 0) continue;
    for (std::size_t i = 0; i <= db; ++i) {
      const std::size_t idx = top - db + i;
      r[idx] = f.sub(r[idx], f.mul(c, bc[i]));
    }
  }
  r.resize(db);
  return {Poly(a.field_ptr(), std::move(qv)), Poly(a.field_ptr(), std::move(r))};
}

Poly gcd(const Poly& a, const Poly& b) {
  if (a.is_zero() && b.is_zero()) throw std::invalid_argument("gcd: both inputs are zero");
  Poly x = a;
  Poly y = b;
  while (!y.is_zero()) {
    Poly r = divrem(x, y).remainder;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monicize().first;
}

bool divides(const Poly& a, const Poly& b) { return divrem(b, a).remainder.is_zero(); }

namespace {

using FieldKey = std::tuple<std::uint32_t, std::uint32_t, std::vector<std::uint32_t>>;

struct IrreducibleCache {
  std::mutex mu;
  std::map<FieldKey, std::map<int, std::unique_ptr<std::vector<Poly>>>> tables;
};

IrreducibleCache& cache() {
  static IrreducibleCache c;
  return c;
}

std::vector<Poly> sieve_irreducibles(const FieldPtr& field, int dmax) {
  std::vector<Poly> out;
  const std::uint64_t q = field->q();
  for (int d = 1; d <= dmax; ++d) {
    std::uint64_t count = 1;
    for (int i = 0; i < d; ++i) {
      if (count > (1ULL << 40) / q) throw ResourceLimit("irreducibles_up_to: table too large");
      count *= q;
    }
    const std::size_t existing = out.size();
    for (std::uint64_t code = 0; code < count; ++code) {
      std::vector<Elem> v(static_cast<std::size_t>(d) + 1);
      std::uint64_t c = code;
      for (int i = 0; i < d; ++i) {
        v[i] = static_cast<Elem>(c % q);
        c /= q;
      }
      v[d] = 1;
      Poly cand(field, std::move(v));
      bool irreducible = true;
      for (std::size_t i = 0; i < existing; ++i) {
        if (2 * out[i].degree().value() > d) break;
        if (divides(out[i], cand)) {
          irreducible = false;
          break;
        }
      }
      if (irreducible) out.push_back(std::move(cand));
    }
  }
  return out;
}

}  // namespace

const std::vector<Poly>& irreducibles_up_to(const FieldPtr& field, int dmax) {
  if (dmax < 1) throw std::invalid_argument("irreducibles_up_to: dmax must be >= 1");
  auto& c = cache();
  std::lock_guard lock(c.mu);
  auto& per_field = c.tables[FieldKey{field->p(), field->k(), field->modulus()}];
  auto it = per_field.find(dmax);
  if (it == per_field.end()) {
    it = per_field.emplace(dmax, std::make_unique<std::vector<Poly>>(sieve_irreducibles(field, dmax))).first;
  }
  return *it->second;
}

Poly Factorization::expand(const FieldPtr& field) const {
  Poly acc = Poly::constant(field, unit);
  for (const auto& [p, e] : factors) {
    for (int i = 0; i < e; ++i) acc = acc * p;
  }
  return acc;
}

int multiplicity(const Poly& p, const Poly& a) {
  if (a.is_zero()) throw std::invalid_argument("multiplicity: zero polynomial");
  if (p.degree() < 1) throw std::invalid_argument("multiplicity: constant divisor");
  int e = 0;
  Poly rest = a;
  while (true) {
    auto [quo, rem] = divrem(rest, p);
    if (!rem.is_zero()) break;
    rest = std::move(quo);
    ++e;
  }
  return e;
}

Factorization factor(const Poly& a) {
  if (a.is_zero()) throw std::invalid_argument("factor: zero polynomial");
  auto [rest, unit] = a.monicize();
  Factorization out;
  out.unit = unit;
  const int deg = rest.degree().value();
  if (deg >= 2) {
    const auto& table = irreducibles_up_to(a.field_ptr(), deg / 2);
    for (const Poly& p : table) {
      if (rest.degree() < 2 * p.degree().value()) break;
      int e = 0;
      while (true) {
        auto [quo, rem] = divrem(rest, p);
        if (!rem.is_zero()) break;
        rest = std::move(quo);
        ++e;
      }
      if (e > 0) out.factors.emplace_back(p, e);
    }
  }
  // The remaining cofactor has no factor of degree <= deg/2, so it is 1 or irreducible.
  if (rest.degree() >= 1) {
    bool merged = false;
    for (auto& [p, e] : out.factors) {
      if (p == rest) {
        ++e;
        merged = true;
      }
    }
    if (!merged) out.factors.emplace_back(std::move(rest), 1);
  }
  std::sort(out.factors.begin(), out.factors.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  return out;
}

}  // namespace ratcode
