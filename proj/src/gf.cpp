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

#include "ratcode/gf.hpp"

#include <limits>
#include <sstream>
#include <stdexcept>

#include "ratcode/error.hpp"

namespace ratcode {

namespace {

constexpr std::uint32_t kTableLimit = 256;

// Remainder of a modulo a monic b, both over GF(p), lowest degree first.
bool divides_mod_p(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b,
                   std::uint32_t p) {
  std::vector<std::uint32_t> r(a);
  const std::size_t db = b.size() - 1;
  for (std::size_t top = r.size(); top-- > db;) {
    const std::uint32_t c = r[top];
    if (c == 0) continue;
    for (std::size_t i = 0; i <= db; ++i) {
      const std::size_t idx = top - db + i;
      r[idx] = static_cast<std::uint32_t>((r[idx] + (p - c) * static_cast<std::uint64_t>(b[i])) % p);
    }
  }
  for (std::size_t i = 0; i < db; ++i) {
    if (r[i] != 0) return false;
  }
  return true;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::optional<std::pair<std::uint32_t, std::uint32_t>> prime_power(std::uint64_t q) {
  if (q < 2) return std::nullopt;
  std::uint64_t p = 0;
  for (std::uint64_t d = 2; d * d <= q; ++d) {
    if (q % d == 0) {
      p = d;
      break;
    }
  }
  if (p == 0) p = q;
  std::uint32_t k = 0;
  while (q % p == 0) {
    q /= p;
    ++k;
  }
  if (q != 1 || p > std::numeric_limits<std::uint32_t>::max()) return std::nullopt;
  return std::make_pair(static_cast<std::uint32_t>(p), k);
}

bool is_irreducible_mod_p(std::span<const std::uint32_t> poly, std::uint32_t p) {
  if (poly.size() < 2 || poly.back() != 1) {
    throw std::invalid_argument("is_irreducible_mod_p: expected a monic polynomial of degree >= 1");
  }
  const std::size_t deg = poly.size() - 1;
  std::vector<std::uint32_t> a(poly.begin(), poly.end());
  for (std::size_t d = 1; 2 * d <= deg; ++d) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= p;
    std::vector<std::uint32_t> cand(d + 1, 0);
    cand[d] = 1;
    for (std::uint64_t code = 0; code < count; ++code) {
      std::uint64_t c = code;
      for (std::size_t i = 0; i < d; ++i) {
        cand[i] = static_cast<std::uint32_t>(c % p);
        c /= p;
      }
      if (divides_mod_p(a, cand, p)) return false;
    }
  }
  return true;
}

std::vector<std::uint32_t> find_irreducible(std::uint32_t p, std::uint32_t k) {
  if (!is_prime(p)) throw std::invalid_argument("find_irreducible: p must be prime");
  if (k < 1) throw std::invalid_argument("find_irreducible: k must be >= 1");
  std::uint64_t count = 1;
  for (std::uint32_t i = 0; i < k; ++i) count *= p;
  std::vector<std::uint32_t> poly(k + 1, 0);
  poly[k] = 1;
  for (std::uint64_t code = 0; code < count; ++code) {
    // c_0 is the most significant position of the lexicographic order.
    std::uint64_t c = code;
    for (std::uint32_t i = k; i-- > 0;) {
      poly[i] = static_cast<std::uint32_t>(c % p);
      c /= p;
    }
    if (is_irreducible_mod_p(poly, p)) return poly;
  }
  throw std::logic_error("find_irreducible: no irreducible polynomial found");
}

FieldPtr Field::make(std::uint32_t p, std::uint32_t k,
                     std::optional<std::vector<std::uint32_t>> modulus) {
  if (!is_prime(p)) throw std::invalid_argument("field: p = " + std::to_string(p) + " is not prime");
  if (k < 1) throw std::invalid_argument("field: k must be >= 1");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < k; ++i) {
    q *= p;
    if (q > (1ULL << 31)) throw std::invalid_argument("field: order too large");
  }
  std::vector<std::uint32_t> mod;
  if (modulus) {
    mod = *modulus;
    if (mod.size() != k + 1) {
      throw std::invalid_argument("field: modulus must have degree exactly k");
    }
    for (auto c : mod) {
      if (c >= p) throw std::invalid_argument("field: modulus coefficient out of range");
    }
    if (mod.back() != 1) throw std::invalid_argument("field: modulus must be monic");
    if (!is_irreducible_mod_p(mod, p)) throw std::invalid_argument("field: modulus is reducible");
  } else {
    mod = find_irreducible(p, k);
  }
  return FieldPtr(new Field(p, k, std::move(mod)));
}

FieldPtr Field::of_order(std::uint64_t q) {
  auto pk = prime_power(q);
  if (!pk) throw std::invalid_argument("field: q = " + std::to_string(q) + " is not a prime power");
  return make(pk->first, pk->second);
}

Field::Field(std::uint32_t p, std::uint32_t k, std::vector<std::uint32_t> modulus)
    : p_(p), k_(k), q_(1), modulus_(std::move(modulus)) {
  for (std::uint32_t i = 0; i < k_; ++i) q_ *= p_;
  if (q_ <= kTableLimit) build_tables();
}

void Field::check(Elem a) const {
  if (a >= q_) {
    throw std::out_of_range("field element " + std::to_string(a) + " out of range for GF(" +
                            std::to_string(q_) + ")");
  }
}

std::vector<std::uint32_t> Field::digits(Elem a) const {
  check(a);
  std::vector<std::uint32_t> d(k_);
  for (std::uint32_t i = 0; i < k_; ++i) {
    d[i] = a % p_;
    a /= p_;
  }
  return d;
}

Elem Field::from_digits(std::span<const std::uint32_t> d) const {
  if (d.size() > k_) throw std::invalid_argument("field: too many digits");
  Elem a = 0;
  for (std::size_t i = d.size(); i-- > 0;) {
    if (d[i] >= p_) throw std::out_of_range("field: digit out of range");
    a = a * p_ + d[i];
  }
  return a;
}

Elem Field::add_direct(Elem a, Elem b) const {
  check(a);
  check(b);
  Elem r = 0;
  Elem place = 1;
  for (std::uint32_t i = 0; i < k_; ++i) {
    r += ((a % p_ + b % p_) % p_) * place;
    a /= p_;
    b /= p_;
    place *= p_;
  }
  return r;
}

Elem Field::mul_direct(Elem a, Elem b) const {
  const auto da = digits(a);
  const auto db = digits(b);
  std::vector<std::uint64_t> prod(2 * k_ - 1, 0);
  for (std::uint32_t i = 0; i < k_; ++i) {
    if (da[i] == 0) continue;
    for (std::uint32_t j = 0; j < k_; ++j) {
      prod[i + j] = (prod[i + j] + static_cast<std::uint64_t>(da[i]) * db[j]) % p_;
    }
  }
  for (std::size_t top = prod.size(); top-- > k_;) {
    const std::uint64_t c = prod[top];
    if (c == 0) continue;
    // x^k == -(m_0 + ... + m_{k-1} x^{k-1})
    for (std::uint32_t i = 0; i <= k_; ++i) {
      const std::size_t idx = top - k_ + i;
      prod[idx] = (prod[idx] + (p_ - c) * modulus_[i]) % p_;
    }
  }
  Elem r = 0;
  for (std::uint32_t i = k_; i-- > 0;) r = r * p_ + static_cast<Elem>(prod[i]);
  return r;
}

void Field::build_tables() {
  add_table_.resize(static_cast<std::size_t>(q_) * q_);
  neg_table_.resize(q_);
  for (Elem a = 0; a < q_; ++a) {
    for (Elem b = 0; b < q_; ++b) {
      const Elem s = add_direct(a, b);
      add_table_[a * q_ + b] = static_cast<std::uint16_t>(s);
      if (s == 0) neg_table_[a] = static_cast<std::uint16_t>(b);
    }
  }
  const std::uint32_t order = q_ - 1;
  Elem generator = 0;
  for (Elem g = 1; g < q_ && generator == 0; ++g) {
    Elem x = g;
    std::uint32_t ord = 1;
    while (x != 1) {
      x = mul_direct(x, g);
      ++ord;
    }
    if (ord == order) generator = g;
  }
  log_.assign(q_, 0);
  exp_.assign(2 * static_cast<std::size_t>(order), 0);
  Elem x = 1;
  for (std::uint32_t i = 0; i < order; ++i) {
    exp_[i] = static_cast<std::uint16_t>(x);
    exp_[i + order] = static_cast<std::uint16_t>(x);
    log_[x] = static_cast<std::uint16_t>(i);
    x = mul_direct(x, generator);
  }
}

Elem Field::add(Elem a, Elem b) const {
  if (add_table_.empty()) return add_direct(a, b);
  check(a);
  check(b);
  return add_table_[a * q_ + b];
}

Elem Field::neg(Elem a) const {
  check(a);
  if (!neg_table_.empty()) return neg_table_[a];
  Elem r = 0;
  Elem place = 1;
  for (std::uint32_t i = 0; i < k_; ++i) {
    r += ((p_ - a % p_) % p_) * place;
    a /= p_;
    place *= p_;
  }
  return r;
}

Elem Field::sub(Elem a, Elem b) const { return add(a, neg(b)); }

Elem Field::mul(Elem a, Elem b) const {
  if (exp_.empty()) return mul_direct(a, b);
  check(a);
  check(b);
  if (a == 0 || b == 0) return 0;
  return exp_[log_[a] + log_[b]];
}

Elem Field::pow(Elem a, std::uint64_t e) const {
  check(a);
  Elem result = 1;
  Elem base = a;
  while (e > 0) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

Elem Field::inv(Elem a) const {
  check(a);
  if (a == 0) throw DivisionByZero("field: inverse of zero");
  if (!exp_.empty()) {
    const std::uint32_t order = q_ - 1;
    return exp_[(order - log_[a]) % order];
  }
  return pow(a, q_ - 2);
}

std::vector<Elem> Field::elements() const {
  std::vector<Elem> out(q_);
  for (Elem a = 0; a < q_; ++a) out[a] = a;
  return out;
}

std::string Field::describe() const {
  std::ostringstream os;
  os << "GF(" << q_ << ")";
  if (k_ > 1) {
    os << " mod ";
    bool first = true;
    for (std::size_t i = modulus_.size(); i-- > 0;) {
      if (modulus_[i] == 0) continue;
      if (!first) os << "+";
      first = false;
      if (i == 0 || modulus_[i] != 1) os << modulus_[i];
      if (i >= 1) os << "t";
      if (i >= 2) os << "^" << i;
    }
  }
  return os.str();
}

}  // namespace ratcode
