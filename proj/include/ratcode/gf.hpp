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

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace ratcode {

/// Field element, encoded as sum(c_i * p^i) over its polynomial-basis
/// coefficients c_i. 0 is the additive and 1 the multiplicative identity.
using Elem = std::uint32_t;

class Field;
using FieldPtr = std::shared_ptr<const Field>;

bool is_prime(std::uint64_t n);

/// Returns (p, k) with q = p^k, or nullopt when q is not a prime power.
std::optional<std::pair<std::uint32_t, std::uint32_t>> prime_power(std::uint64_t q);

/// Irreducibility over GF(p) by exhaustive trial division. `poly` holds
/// coefficients lowest degree first and must be monic.
bool is_irreducible_mod_p(std::span<const std::uint32_t> poly, std::uint32_t p);

/// Smallest monic irreducible polynomial of degree k over GF(p), comparing
/// coefficient tuples (c_0, c_1, ..., c_{k-1}) lexicographically.
std::vector<std::uint32_t> find_irreducible(std::uint32_t p, std::uint32_t k);

/// GF(p^k) in a polynomial basis over a fixed irreducible modulus.
///
/// Immutable once built; share it through FieldPtr. For q <= 256 addition,
/// negation and multiplication go through precomputed tables (log/antilog
/// for the product); the *_direct members always compute from the
/// coefficient representation and serve as the reference path.
class Field {
 public:
  /// Validates p and the modulus (monic, degree k, irreducible). Without an
  /// explicit modulus, find_irreducible(p, k) is used.
  static FieldPtr make(std::uint32_t p, std::uint32_t k,
                       std::optional<std::vector<std::uint32_t>> modulus = std::nullopt);
  /// Field of order q with the default modulus.
  static FieldPtr of_order(std::uint64_t q);

  std::uint32_t p() const { return p_; }
  std::uint32_t k() const { return k_; }
  std::uint32_t q() const { return q_; }
  /// Modulus coefficients over GF(p), lowest degree first, length k + 1.
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }
  bool has_tables() const { return !exp_.empty(); }

  Elem add(Elem a, Elem b) const;
  Elem sub(Elem a, Elem b) const;
  Elem neg(Elem a) const;
  Elem mul(Elem a, Elem b) const;
  Elem pow(Elem a, std::uint64_t e) const;
  /// Throws DivisionByZero for a == 0.
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }

  Elem add_direct(Elem a, Elem b) const;
  Elem mul_direct(Elem a, Elem b) const;

  /// All q elements in ascending encoding order. This order defines the
  /// coordinate order of every evaluation code built over the field.
  std::vector<Elem> elements() const;

  std::vector<std::uint32_t> digits(Elem a) const;
  Elem from_digits(std::span<const std::uint32_t> digits) const;

  bool contains(Elem a) const { return a < q_; }

  /// Same characteristic, degree and modulus.
  bool operator==(const Field& other) const {
    return p_ == other.p_ && k_ == other.k_ && modulus_ == other.modulus_;
  }

  std::string describe() const;

 private:
  Field(std::uint32_t p, std::uint32_t k, std::vector<std::uint32_t> modulus);

  void check(Elem a) const;
  void build_tables();

  std::uint32_t p_;
  std::uint32_t k_;
  std::uint32_t q_;
  std::vector<std::uint32_t> modulus_;

  // Present only when q <= 256.
  std::vector<std::uint16_t> add_table_;
  std::vector<std::uint16_t> neg_table_;
  std::vector<std::uint16_t> log_;
  std::vector<std::uint16_t> exp_;
};

}  // namespace ratcode
