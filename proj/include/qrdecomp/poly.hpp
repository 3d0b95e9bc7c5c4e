// Copyright 2026 The qrdecomp Authors
// SPDX-License-Identifier: Apache-2.0

// Dense polynomials over a prime field F_p, coefficients stored low degree first.
// Only what field construction needs: reduction, products modulo a monic
// polynomial, gcd and a Rabin irreducibility test.

#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "qrdecomp/error.hpp"

namespace qrdecomp::poly {

using Coeffs = std::vector<std::uint32_t>;

inline void trim(Coeffs& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

inline int degree(const Coeffs& a) {
  for (std::size_t i = a.size(); i > 0; --i)
    if (a[i - 1] != 0) return static_cast<int>(i - 1);
  return -1;
}

inline std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t p) {
  // p is prime, so a^(p-2) is the inverse.
  std::uint64_t result = 1, base = a % p;
  std::uint64_t e = p - 2;
  while (e > 0) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(result);
}

/// Remainder of `a` modulo `m`; `m` need not be monic but must be nonzero.
inline Coeffs rem(Coeffs a, const Coeffs& m, std::uint32_t p) {
  const int dm = degree(m);
  if (dm < 0) throw Error(ErrorKind::DivisionByZero, "polynomial remainder by zero");
  const std::uint64_t lead_inv = inverse_mod(m[dm], p);
  for (int da = degree(a); da >= dm; da = degree(a)) {
    const std::uint64_t factor = a[da] * lead_inv % p;
    const int shift = da - dm;
    for (int i = 0; i <= dm; ++i) {
      const std::uint64_t sub = factor * m[i] % p;
      a[i + shift] = static_cast<std::uint32_t>((a[i + shift] + p - sub) % p);
    }
  }
  trim(a);
  return a;
}

inline Coeffs mul_mod(const Coeffs& a, const Coeffs& b, const Coeffs& m, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  Coeffs prod(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      prod[i + j] = static_cast<std::uint32_t>(
          (prod[i + j] + static_cast<std::uint64_t>(a[i]) * b[j]) % p);
    }
  }
  return rem(std::move(prod), m, p);
}

inline Coeffs pow_mod(Coeffs base, std::uint64_t e, const Coeffs& m, std::uint32_t p) {
  Coeffs result{1};
  base = rem(std::move(base), m, p);
  while (e > 0) {
    if (e & 1) result = mul_mod(result, base, m, p);
    base = mul_mod(base, base, m, p);
    e >>= 1;
  }
  return rem(std::move(result), m, p);
}

inline Coeffs sub(Coeffs a, const Coeffs& b, std::uint32_t p) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = (a[i] + p - b[i]) % p;
  trim(a);
  return a;
}

inline Coeffs gcd(Coeffs a, Coeffs b, std::uint32_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Coeffs r = rem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

inline bool has_root(const Coeffs& f, std::uint32_t p) {
  for (std::uint64_t x = 0; x < p; ++x) {
    std::uint64_t acc = 0;
    for (std::size_t i = f.size(); i > 0; --i) acc = (acc * x + f[i - 1]) % p;
    if (acc == 0) return true;
  }
  return false;
}

inline std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

/// x^(p^k) mod f, by k successive p-th powers.
inline Coeffs frobenius_power_of_x(const Coeffs& f, std::uint32_t p, int k) {
  Coeffs h = rem(Coeffs{0, 1}, f, p);
  for (int i = 0; i < k; ++i) h = pow_mod(h, p, f, p);
  return h;
}

/// Rabin's test for a monic f of degree n >= 1.
inline bool is_irreducible(const Coeffs& f, std::uint32_t p) {
  const int n = degree(f);
  if (n < 1) return false;
  if (n == 1) return true;
  if (n <= 3) return !has_root(f, p);
  const Coeffs x{0, 1};
  if (sub(frobenius_power_of_x(f, p, n), x, p) != Coeffs{}) return false;
  for (std::uint64_t r : prime_factors(static_cast<std::uint64_t>(n))) {
    const Coeffs g = sub(frobenius_power_of_x(f, p, n / static_cast<int>(r)), x, p);
    if (degree(gcd(f, g, p)) != 0) return false;
  }
  return true;
}

/// Least monic irreducible of degree n, ordering candidates by (c_0, c_1, ..., c_{n-1})
/// lexicographically with c_0 most significant.
inline Coeffs least_monic_irreducible(int n, std::uint32_t p) {
  if (n == 1) return Coeffs{0, 1};
  std::uint64_t total = 1;
  for (int i = 0; i < n; ++i) total *= p;
  Coeffs f(static_cast<std::size_t>(n) + 1, 0);
  f[n] = 1;
  for (std::uint64_t t = 0; t < total; ++t) {
    std::uint64_t rest = t;
    for (int i = n - 1; i >= 0; --i) {
      f[i] = static_cast<std::uint32_t>(rest % p);
      rest /= p;
    }
    if (f[0] == 0) continue;  // x divides f
    if (is_irreducible(f, p)) return f;
  }
  throw Error(ErrorKind::InvariantBreach, "no monic irreducible polynomial found");
}

}  // namespace qrdecomp::poly
