// Copyright 2026 The qrdecomp Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <utility>

#include "qrdecomp/error.hpp"
#include "qrdecomp/field.hpp"

namespace qrdecomp {

struct SizeWindow {
  double lower = 0.0;
  double upper = 0.0;
};

/// (sqrt(p) / (3 ln p), sqrt(p) ln p): the proven range for #A and #B of any
/// decomposition of the residues modulo a prime p.
inline SizeWindow sarkozy_window(std::uint64_t p) {
  if (p == 2 || !is_prime(p)) throw Error(ErrorKind::NotOddPrime, "p = " + std::to_string(p));
  const double root = std::sqrt(static_cast<double>(p));
  const double lg = std::log(static_cast<double>(p));
  return {root / (3.0 * lg), root * lg};
}

/// C(floor(z), n) exactly, or nullopt if it does not fit 64 bits.
inline std::optional<std::uint64_t> binom_floor(double z, std::uint64_t n) {
  if (!(z >= 0.0)) throw Error(ErrorKind::DomainError, "binom_floor needs z >= 0");
  const auto top = static_cast<std::uint64_t>(std::floor(z));
  if (n > top) return 0;
  const std::uint64_t k = std::min(n, top - n);
  // Running products C(top - k + i, i) are integers at every step.
  unsigned __int128 acc = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    acc = acc * (top - k + i) / i;
    if (acc > UINT64_MAX) return std::nullopt;
  }
  return static_cast<std::uint64_t>(acc);
}

inline double log10_binom_floor(double z, std::uint64_t n) {
  const double top = std::floor(z);
  const auto nn = static_cast<double>(n);
  if (nn > top) return -INFINITY;
  return (std::lgamma(top + 1.0) - std::lgamma(nn + 1.0) - std::lgamma(top - nn + 1.0)) / std::log(10.0);
}

struct BoundValue {
  double value = 0.0;
  bool log10_scale = false;
};

/// C(floor(c sqrt q), k) * C(floor(c sqrt q), m); switches to log10 when the
/// product leaves 64 bits.
inline BoundValue nkmq_bound_report(std::uint64_t q, std::uint64_t k, std::uint64_t m, double c) {
  if (!(c > 0.0)) throw Error(ErrorKind::DomainError, "c must be positive");
  if (k < 2 || m < 2) throw Error(ErrorKind::DomainError, "k and m must be >= 2");
  const double z = c * std::sqrt(static_cast<double>(q));
  const auto bk = binom_floor(z, k);
  const auto bm = binom_floor(z, m);
  if (bk && bm) {
    if (*bk == 0 || *bm == 0) return {0.0, false};
    const unsigned __int128 prod = static_cast<unsigned __int128>(*bk) * *bm;
    if (prod <= UINT64_MAX) return {static_cast<double>(static_cast<std::uint64_t>(prod)), false};
  }
  return {log10_binom_floor(z, k) + log10_binom_floor(z, m), true};
}

}  // namespace qrdecomp
