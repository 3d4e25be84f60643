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

#include "ratcode/code.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <sstream>
#include <stdexcept>

#include "ratcode/error.hpp"

namespace ratcode {

namespace {

std::uint64_t env_or(const char* name, std::uint64_t fallback) {
  const char* v = std::getenv(name);
  if (v == nullptr || *v == '\0') return fallback;
  char* end = nullptr;
  const unsigned long long parsed = std::strtoull(v, &end, 10);
  if (end == v || *end != '\0') throw std::invalid_argument(std::string("invalid value for ") + name);
  return parsed;
}

std::uint64_t upow(std::uint64_t b, int e) {
  std::uint64_t r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

}  // namespace

Limits Limits::from_env() {
  Limits l;
  l.max_words = env_or("RATCODE_MAX_WORDS", l.max_words);
  l.max_pairs = env_or("RATCODE_MAX_PAIRS", l.max_pairs);
  return l;
}

void CodeParams::validate() const {
  if (!field) throw std::invalid_argument("code params: missing field");
  if (m < 1 || 2 * static_cast<std::uint64_t>(m) > field->q()) {
    throw std::invalid_argument("code params: need 1 <= m <= q/2 (q = " + std::to_string(field->q()) +
                                ", m = " + std::to_string(m) + ")");
  }
}

std::string Codeword::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < symbols_.size(); ++i) {
    if (i) out += ',';
    out += symbols_[i].to_string();
  }
  return out;
}

// ---------------------------------------------------------------- Code

Codeword Code::word(std::size_t i) const {
  const auto r = row(i);
  std::vector<Symbol> s(static_cast<std::size_t>(n_));
  for (int c = 0; c < n_; ++c) s[c] = r[c] == inf_byte() ? Symbol::inf() : Symbol::finite(r[c]);
  return Codeword(std::move(s));
}

std::vector<std::uint8_t> Code::pack(const Codeword& w) const {
  if (w.size() != static_cast<std::size_t>(n_)) {
    throw std::invalid_argument("codeword length " + std::to_string(w.size()) + " does not match code length " +
                                std::to_string(n_));
  }
  std::vector<std::uint8_t> out(stride_, 0);
  for (int c = 0; c < n_; ++c) {
    const Symbol s = w[c];
    if (s.is_inf()) {
      out[c] = inf_byte();
    } else {
      if (!field_->contains(s.value())) throw std::out_of_range("codeword symbol outside the field");
      out[c] = static_cast<std::uint8_t>(s.value());
    }
  }
  return out;
}

std::optional<std::size_t> Code::find(const Codeword& w) const {
  const auto packed = pack(w);
  auto it = index_.find(std::string(packed.begin(), packed.end()));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Code::Builder::Builder(FieldPtr field, int n, CodeKind kind) {
  if (!field) throw std::invalid_argument("code: missing field");
  if (field->q() > kMaxAlphabet) throw std::invalid_argument("code: q must be <= 255 for packed storage");
  if (n < 1) throw std::invalid_argument("code: length must be positive");
  code_.field_ = std::move(field);
  code_.n_ = n;
  code_.stride_ = (static_cast<std::size_t>(n) + 15) / 16 * 16;
  code_.kind_ = kind;
}

Code::Builder& Code::Builder::m(int m) {
  code_.m_ = m;
  return *this;
}

Code::Builder& Code::Builder::dimension(int k) {
  code_.dimension_ = k;
  return *this;
}

Code::Builder& Code::Builder::note(std::string text) {
  code_.notes_.push_back(std::move(text));
  return *this;
}

bool Code::Builder::add(const Codeword& w, std::optional<RatFun> source) {
  ++code_.offered_;
  const auto packed = code_.pack(w);
  std::string key(packed.begin(), packed.end());
  auto [it, inserted] = code_.index_.try_emplace(std::move(key), code_.size());
  if (!inserted) {
    code_.collisions_.push_back({it->second, std::move(source)});
    return false;
  }
  const bool all_inf = std::all_of(w.symbols().begin(), w.symbols().end(), [](Symbol s) { return s.is_inf(); });
  if (all_inf && !source) code_.all_inf_index_ = code_.size();
  code_.table_.insert(code_.table_.end(), packed.begin(), packed.end());
  code_.sources_.push_back(std::move(source));
  return true;
}

Code Code::Builder::build() && { return std::move(code_); }

// ---------------------------------------------------------------- L_m

std::vector<RatFun> enumerate_Lm(const CodeParams& params, const Limits& limits) {
  if (!params.field) throw std::invalid_argument("enumerate_Lm: missing field");
  if (params.m < 1) throw std::invalid_argument("enumerate_Lm: m must be >= 1");
  const BigInt bound = claimed_function_count(params.q(), static_cast<std::uint64_t>(params.m));
  if (bound > limits.max_words) {
    throw ResourceLimit("enumerate_Lm: up to " + bound.str() + " functions exceeds the limit of " +
                        std::to_string(limits.max_words));
  }
  const FieldPtr& f = params.field;
  const std::uint64_t q = f->q();
  const int m = params.m;
  const std::uint64_t numerators = upow(q, m + 1);

  std::vector<RatFun> out;
  out.reserve(static_cast<std::size_t>(bound));
  out.push_back(RatFun::zero(f));
  for (int dv = 0; dv <= m; ++dv) {
    const std::uint64_t lower = upow(q, dv);
    for (std::uint64_t rest = 0; rest < lower; ++rest) {
      const Poly v = Poly::from_encoding(f, lower + rest);  // monic of degree dv
      for (std::uint64_t ue = 1; ue < numerators; ++ue) {
        const Poly u = Poly::from_encoding(f, ue);
        RatFun r = RatFun::make(u, v);
        // gcd(u, v) = 1 exactly when nothing cancels.
        if (r.den() == v) out.push_back(std::move(r));
      }
    }
  }
  return out;
}

OracleEnumeration enumerate_Lm_oracle(const CodeParams& params, const Limits& limits) {
  if (!params.field) throw std::invalid_argument("oracle: missing field");
  if (params.m < 1) throw std::invalid_argument("oracle: m must be >= 1");
  const FieldPtr& f = params.field;
  const std::uint64_t q = f->q();
  const int m = params.m;
  const std::uint64_t polys = upow(q, m + 1);
  if (polys * (polys - 1) > limits.max_oracle_pairs) {
    throw ResourceLimit("oracle: " + std::to_string(polys * (polys - 1)) + " pairs exceeds the limit");
  }

  OracleEnumeration out;
  std::set<RatFun> all, s1, s2;
  for (std::uint64_t he = 1; he < polys; ++he) {
    const Poly h = Poly::from_encoding(f, he);
    const int dh = h.degree().value();
    for (std::uint64_t ge = 0; ge < polys; ++ge) {
      const Poly g = Poly::from_encoding(f, ge);
      ++out.raw_pairs;
      RatFun r = RatFun::make(g, h);
      if (h.is_monic() && dh == m && !g.is_zero()) {
        ++out.s1_pairs;
        s1.insert(r);
      } else if (h.is_monic() && dh < m && g.degree() == m) {
        ++out.s2_pairs;
        s2.insert(r);
      }
      all.insert(std::move(r));
    }
  }
  // The zero function is the extra element of S1.
  ++out.s1_pairs;
  s1.insert(RatFun::zero(f));
  out.s1_distinct = s1.size();
  out.s2_distinct = s2.size();
  out.functions.assign(all.begin(), all.end());
  return out;
}

Codeword phi(const RatFun& f, const CodeParams& params) {
  if (f.height() > params.m) {
    throw std::invalid_argument("phi: " + f.to_string() + " is not in L_" + std::to_string(params.m));
  }
  const auto pts = rational_points(*params.field);
  std::vector<Symbol> s;
  s.reserve(pts.size());
  for (Symbol p : pts) s.push_back(f.evaluate(p));
  return Codeword(std::move(s));
}

Code construct_code(const CodeParams& params, const Limits& limits) {
  params.validate();
  Code::Builder b(params.field, params.n(), CodeKind::Rational);
  b.m(params.m);
  for (auto& f : enumerate_Lm(params, limits)) {
    Codeword w = phi(f, params);
    b.add(w, std::move(f));
  }
  b.add(Codeword(std::vector<Symbol>(static_cast<std::size_t>(params.n()), Symbol::inf())), std::nullopt);
  return std::move(b).build();
}

// ---------------------------------------------------------------- AG codes

Code ag_code(const FieldPtr& field, std::span<const Symbol> points, const Divisor& g, const Limits& limits) {
  if (!g.is_effective()) throw std::invalid_argument("ag_code: G must be effective");
  const int n = static_cast<int>(points.size());
  if (n < 1) throw std::invalid_argument("ag_code: no evaluation places");
  std::set<Symbol> seen;
  for (Symbol p : points) {
    if (p.is_finite() && !field->contains(p.value())) throw std::out_of_range("ag_code: place outside the field");
    if (!seen.insert(p).second) throw std::invalid_argument("ag_code: evaluation places must be distinct");
    if (g.coeff(Place::rational(field, p)) != 0) {
      throw std::invalid_argument("ag_code: supp(G) meets the evaluation places at " + p.to_string());
    }
  }
  const std::int64_t deg = g.degree();
  std::vector<std::string> notes;
  if (deg > n - 1) throw std::invalid_argument("ag_code: need deg G <= n - 2");
  if (deg == n - 1) notes.push_back("deg G = n - 1: the code is the whole space F_q^n");

  const int k = static_cast<int>(deg) + 1;
  const std::uint64_t q = field->q();
  std::uint64_t words = 1;
  for (int i = 0; i < k; ++i) {
    if (words > limits.max_words / q) throw ResourceLimit("ag_code: q^k exceeds the word limit");
    words *= q;
  }

  Poly den = Poly::one(field);
  for (const auto& [p, e] : g.terms()) {
    if (p.is_infinite()) continue;
    for (std::int64_t i = 0; i < e; ++i) den = den * p.poly();
  }
  // Generator rows: the basis x^j / den evaluated at the places.
  const auto basis = rr_basis(field, g);
  std::vector<std::vector<Elem>> gen(basis.size(), std::vector<Elem>(points.size()));
  for (std::size_t j = 0; j < basis.size(); ++j) {
    for (std::size_t c = 0; c < points.size(); ++c) gen[j][c] = basis[j].evaluate(points[c]).value();
  }

  Code::Builder b(field, n, CodeKind::AlgebraicGeometry);
  b.dimension(k);
  for (auto& t : notes) b.note(std::move(t));
  std::vector<Elem> coeffs(static_cast<std::size_t>(k), 0);
  for (std::uint64_t code = 0; code < words; ++code) {
    std::uint64_t c = code;
    for (int j = k; j-- > 0;) {
      coeffs[j] = static_cast<Elem>(c % q);
      c /= q;
    }
    std::vector<Symbol> w(points.size());
    for (std::size_t col = 0; col < points.size(); ++col) {
      Elem acc = 0;
      for (int j = 0; j < k; ++j) acc = field->add(acc, field->mul(coeffs[j], gen[j][col]));
      w[col] = Symbol::finite(acc);
    }
    b.add(Codeword(std::move(w)), RatFun::make(Poly(field, coeffs), den));
  }
  return std::move(b).build();
}

Code mds_comparison_code(const FieldPtr& field, int m, const Limits& limits) {
  if (m < 1 || 2 * static_cast<std::uint64_t>(m) + 1 > field->q()) {
    throw std::invalid_argument("mds_comparison_code: need 1 <= m and 2m <= q - 1");
  }
  const auto& irr = irreducibles_up_to(field, 2);
  auto it = std::find_if(irr.begin(), irr.end(), [](const Poly& p) { return p.degree() == 2; });
  const Place quad = Place::finite(*it);
  const auto pts = rational_points(*field);
  return ag_code(field, pts, Divisor::of(quad, m), limits);
}

}  // namespace ratcode
