// Copyright 2026 The qrdecomp Authors
// SPDX-License-Identifier: Apache-2.0

// Odd-characteristic finite fields F_q, q = p^n <= 2^20.
//
// Elements are addressed by index = sum c_i p^i over the coefficient vector of
// the element as a polynomial modulo the field modulus. For prime fields the
// index is the integer residue itself.

#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qrdecomp/element_set.hpp"
#include "qrdecomp/error.hpp"
#include "qrdecomp/poly.hpp"

namespace qrdecomp {

inline constexpr std::uint32_t kMaxFieldSize = 1U << 20;

struct Element {
  Index index = 0;
  friend constexpr auto operator<=>(Element, Element) = default;
};

struct FieldSpec {
  std::uint32_t p = 0;
  int n = 0;
  poly::Coeffs modulus;  // n + 1 coefficients, monic

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

/// Precomputed tables that fully determine multiplication and the quadratic
/// character. `exp` is empty for prime fields.
struct FieldTables {
  Index generator = 0;
  std::vector<Index> exp;  // exp[i] = generator^i, i in [0, q-1)
  std::vector<std::int8_t> chi;
};

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

class Field {
 public:
  /// Builds F_{p^n}; an optional `tables` argument skips table construction
  /// (used by the on-disk cache) but is validated for shape.
  Field(std::uint32_t p, int n, std::optional<FieldTables> tables = std::nullopt) {
    if (p == 2 || !is_prime(p)) throw Error(ErrorKind::NotOddPrime, "p = " + std::to_string(p));
    if (n < 1) throw Error(ErrorKind::DomainError, "extension degree must be >= 1");
    std::uint64_t q = 1;
    for (int i = 0; i < n; ++i) {
      q *= p;
      if (q > kMaxFieldSize) throw Error(ErrorKind::FieldTooLarge, "p^n exceeds 2^20");
    }
    spec_.p = p;
    spec_.n = n;
    spec_.modulus = poly::least_monic_irreducible(n, p);
    q_ = static_cast<Index>(q);
    powers_.resize(static_cast<std::size_t>(n));
    Index pw = 1;
    for (int i = 0; i < n; ++i, pw *= p) powers_[i] = pw;

    if (tables && tables->chi.size() == q_ && (n == 1 || tables->exp.size() == q_ - 1)) {
      tables_ = std::move(*tables);
      if (n > 1) {
        log_.assign(q_, 0);
        for (Index i = 0; i + 1 < q_; ++i) log_[tables_.exp[i]] = i;
      }
    } else {
      build_tables();
    }
    residues_ = ElementSet(q_);
    for (Index i = 1; i < q_; ++i)
      if (tables_.chi[i] == 1) residues_.insert(i);
  }

  std::uint32_t p() const noexcept { return spec_.p; }
  int n() const noexcept { return spec_.n; }
  Index q() const noexcept { return q_; }
  const FieldSpec& spec() const noexcept { return spec_; }
  const FieldTables& tables() const noexcept { return tables_; }
  bool is_prime_field() const noexcept { return spec_.n == 1; }

  Element zero() const noexcept { return {0}; }
  Element one() const noexcept { return {1}; }

  Element add(Element a, Element b) const {
    check(a);
    check(b);
    return {add_index(a.index, b.index)};
  }
  Element neg(Element a) const {
    check(a);
    return {neg_index(a.index)};
  }
  Element sub(Element a, Element b) const {
    check(a);
    check(b);
    return {add_index(a.index, neg_index(b.index))};
  }
  Element mul(Element a, Element b) const {
    check(a);
    check(b);
    return {mul_index(a.index, b.index)};
  }
  Element pow(Element a, std::uint64_t e) const {
    check(a);
    return {pow_index(a.index, e)};
  }
  Element inv(Element a) const {
    check(a);
    if (a.index == 0) throw Error(ErrorKind::DivisionByZero, "inverse of zero");
    return {pow_index(a.index, q_ - 2)};
  }

  /// Table lookup of the quadratic character: 0 at zero, +1 on nonzero squares, -1 otherwise.
  int chi(Element a) const {
    check(a);
    return tables_.chi[a.index];
  }
  std::span<const std::int8_t> character_table() const noexcept { return tables_.chi; }

  /// Q as read off the character table.
  const ElementSet& residue_set() const noexcept { return residues_; }

  // Unchecked index arithmetic for hot loops.
  Index add_index(Index a, Index b) const noexcept {
    if (spec_.n == 1) {
      const Index s = a + b;
      return s >= q_ ? s - q_ : s;
    }
    Index out = 0;
    const std::uint32_t p = spec_.p;
    for (int i = 0; i < spec_.n; ++i) {
      const Index d = (a % p + b % p) % p;
      out += d * powers_[i];
      a /= p;
      b /= p;
    }
    return out;
  }
  Index neg_index(Index a) const noexcept {
    if (spec_.n == 1) return a == 0 ? 0 : q_ - a;
    Index out = 0;
    const std::uint32_t p = spec_.p;
    for (int i = 0; i < spec_.n; ++i) {
      const Index d = a % p;
      out += (d == 0 ? 0 : p - d) * powers_[i];
      a /= p;
    }
    return out;
  }
  Index sub_index(Index a, Index b) const noexcept { return add_index(a, neg_index(b)); }
  Index mul_index(Index a, Index b) const noexcept {
    if (spec_.n == 1) return static_cast<Index>(static_cast<std::uint64_t>(a) * b % q_);
    if (a == 0 || b == 0) return 0;
    const std::uint64_t e = static_cast<std::uint64_t>(log_[a]) + log_[b];
    return tables_.exp[e % (q_ - 1)];
  }
  Index pow_index(Index a, std::uint64_t e) const noexcept {
    Index result = 1;
    Index base = a;
    while (e > 0) {
      if (e & 1) result = mul_index(result, base);
      base = mul_index(base, base);
      e >>= 1;
    }
    return result;
  }

  std::vector<std::uint32_t> coefficients(Element a) const {
    check(a);
    std::vector<std::uint32_t> c(static_cast<std::size_t>(spec_.n));
    Index rest = a.index;
    for (auto& digit : c) {
      digit = rest % spec_.p;
      rest /= spec_.p;
    }
    return c;
  }
  Element from_coefficients(std::span<const std::uint32_t> coeffs) const {
    if (coeffs.size() > static_cast<std::size_t>(spec_.n))
      throw Error(ErrorKind::DomainError, "too many coefficients");
    Index out = 0;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
      if (coeffs[i] >= spec_.p) throw Error(ErrorKind::DomainError, "coefficient out of range");
      out += coeffs[i] * powers_[i];
    }
    return {out};
  }

  /// Multiplication by explicit polynomial product and reduction; the table
  /// route in `mul` is checked against this.
  Element mul_poly(Element a, Element b) const {
    auto ca = coefficients(a);
    auto cb = coefficients(b);
    poly::trim(ca);
    poly::trim(cb);
    auto prod = poly::mul_mod(ca, cb, spec_.modulus, spec_.p);
    prod.resize(static_cast<std::size_t>(spec_.n), 0);
    return from_coefficients(prod);
  }

 private:
  void check(Element a) const {
    if (a.index >= q_) throw Error(ErrorKind::IndexOutOfRange, "element index " + std::to_string(a.index));
  }

  void build_tables() {
    if (spec_.n > 1) {
      // Primitive element: order exactly q - 1.
      const auto factors = poly::prime_factors(q_ - 1);
      Index g = 0;
      for (Index cand = 2; cand < q_ && g == 0; ++cand) {
        auto c = coefficients_unchecked(cand);
        bool primitive = true;
        for (std::uint64_t r : factors) {
          if (poly::pow_mod(c, (q_ - 1) / r, spec_.modulus, spec_.p) == poly::Coeffs{1}) {
            primitive = false;
            break;
          }
        }
        if (primitive) g = cand;
      }
      if (g == 0) throw Error(ErrorKind::InvariantBreach, "no primitive element");
      tables_.generator = g;
      tables_.exp.assign(q_ - 1, 0);
      const auto gc = coefficients_unchecked(g);
      poly::Coeffs cur{1};
      for (Index i = 0; i + 1 < q_; ++i) {
        poly::Coeffs padded = cur;
        padded.resize(static_cast<std::size_t>(spec_.n), 0);
        Index idx = 0;
        for (int k = 0; k < spec_.n; ++k) idx += padded[k] * powers_[k];
        tables_.exp[i] = idx;
        cur = poly::mul_mod(cur, gc, spec_.modulus, spec_.p);
      }
      log_.assign(q_, 0);
      for (Index i = 0; i + 1 < q_; ++i) log_[tables_.exp[i]] = i;
    }
    // Character by square-and-multiply once per element.
    tables_.chi.assign(q_, 0);
    const std::uint64_t half = (q_ - 1) / 2;
    for (Index x = 1; x < q_; ++x) tables_.chi[x] = pow_index(x, half) == 1 ? 1 : -1;
  }

  poly::Coeffs coefficients_unchecked(Index a) const {
    poly::Coeffs c(static_cast<std::size_t>(spec_.n));
    for (auto& digit : c) {
      digit = a % spec_.p;
      a /= spec_.p;
    }
    poly::trim(c);
    return c;
  }

  FieldSpec spec_;
  Index q_ = 0;
  std::vector<Index> powers_;
  FieldTables tables_;
  std::vector<Index> log_;
  ElementSet residues_;
};

inline Field build_field(std::uint32_t p, int n) { return Field(p, n); }

/// Splits q into p^n; throws NotOddPrime if q is not a power of an odd prime.
inline std::pair<std::uint32_t, int> split_prime_power(std::uint64_t q) {
  if (q < 3) throw Error(ErrorKind::NotOddPrime, "q = " + std::to_string(q));
  std::uint64_t p = 0;
  for (std::uint64_t d = 2; d * d <= q; ++d) {
    if (q % d == 0) {
      p = d;
      break;
    }
  }
  if (p == 0) p = q;
  int n = 0;
  std::uint64_t rest = q;
  while (rest % p == 0) {
    rest /= p;
    ++n;
  }
  if (rest != 1 || p == 2) throw Error(ErrorKind::NotOddPrime, "q = " + std::to_string(q) + " is not an odd prime power");
  if (q > kMaxFieldSize) throw Error(ErrorKind::FieldTooLarge, "q exceeds 2^20");
  return {static_cast<std::uint32_t>(p), n};
}

inline int quadratic_character(const Field& field, Element x) { return field.chi(x); }

/// Q = { x*x : x != 0 }, computed by squaring rather than from the character table.
inline ElementSet quadratic_residues(const Field& field) {
  ElementSet out(field.q());
  for (Index x = 1; x < field.q(); ++x) out.insert(field.mul_index(x, x));
  return out;
}

}  // namespace qrdecomp
