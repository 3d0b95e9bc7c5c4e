// Copyright 2026 The qrdecomp Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <algorithm>
#include <numeric>
#include <utility>
#include <random>
#include <vector>

namespace qrdecomp {

/// Seeded generator with a fully specified output stream: std::mt19937_64
/// (its algorithm is fixed by the standard) plus rejection sampling for bounded
/// draws, so results do not depend on the standard library's distributions.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform in [0, bound); bound > 0.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
      const std::uint64_t r = engine_();
      if (r >= threshold) return r % bound;
    }
  }

 private:
  std::mt19937_64 engine_;
};

/// k distinct indices from [0, n), by a partial Fisher-Yates shuffle.
inline std::vector<std::uint32_t> sample_indices(Rng& rng, std::uint32_t n, std::uint32_t k) {
  std::vector<std::uint32_t> pool(n);
  std::iota(pool.begin(), pool.end(), 0U);
  for (std::uint32_t i = 0; i < k && i < n; ++i) {
    const auto j = static_cast<std::uint32_t>(i + rng.below(n - i));
    std::swap(pool[i], pool[j]);
  }
  pool.resize(std::min(k, n));
  return pool;
}

}  // namespace qrdecomp
