// Copyright 2026 The qrdecomp Authors
// SPDX-License-Identifier: Apache-2.0

// Double character sums, the two-term bound they are compared against, and the
// filter sets U(V) = { u : chi(u + v) = +1 for every v in V }.
//
// Nothing here asserts an implied constant. Bounds are evaluated with constant
// 1 and the observed ratio is reported.

#pragma once

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "qrdecomp/element_set.hpp"
#include "qrdecomp/error.hpp"
#include "qrdecomp/field.hpp"
#include "qrdecomp/rng.hpp"
#include "qrdecomp/set_kernel.hpp"

namespace qrdecomp {

inline std::int64_t double_char_sum(const Field& field, const ElementSet& u_set, const ElementSet& v_set) {
  require_field(field, u_set);
  require_field(field, v_set);
  const auto chi = field.character_table();
  const auto vs = v_set.indices();
  std::int64_t total = 0;
  u_set.for_each([&](Index u) {
    for (Index v : vs) total += chi[field.add_index(u, v)];
  });
  return total;
}

/// (#U)^{1-1/2nu} #V q^{1/4nu} + (#U)^{1-1/2nu} (#V)^{1/2} q^{1/2nu}.
inline double karatsuba_rhs(double q, std::uint64_t size_u, std::uint64_t size_v, int nu) {
  if (size_u == 0 || size_v == 0) throw Error(ErrorKind::DomainError, "set sizes must be positive");
  if (nu < 1) throw Error(ErrorKind::DomainError, "nu must be >= 1");
  const double u_factor = std::pow(static_cast<double>(size_u), 1.0 - 1.0 / (2.0 * nu));
  const double v = static_cast<double>(size_v);
  return u_factor * v * std::pow(q, 1.0 / (4.0 * nu)) + u_factor * std::sqrt(v) * std::pow(q, 1.0 / (2.0 * nu));
}

/// U(V), as the AND over v in V of the translates Q - v.
inline ElementSet filter_set(const ResidueMasks& masks, const ElementSet& v_set) {
  require_field(masks.field(), v_set);
  if (v_set.empty()) throw Error(ErrorKind::EmptyV, "filter_set needs a nonempty V");
  ElementSet out = ElementSet::full(v_set.universe());
  v_set.for_each([&](Index v) { masks.intersect_minus(out, v); });
  return out;
}

inline ElementSet filter_set(const Field& field, const ElementSet& v_set) {
  return filter_set(ResidueMasks(field), v_set);
}

/// floor(q^{epsilon/2}), guarded against pow() landing just under an integer.
inline std::uint32_t filter_v_size(std::uint32_t q, double epsilon) {
  const double raw = std::pow(static_cast<double>(q), epsilon / 2.0);
  auto v = static_cast<std::uint32_t>(std::floor(raw));
  if (std::pow(static_cast<double>(v + 1), 2.0 / epsilon) <= static_cast<double>(q) * (1.0 + 1e-12)) ++v;
  return v;
}

struct FilterSample {
  std::uint64_t sample = 0;
  ElementSet v_set;
  std::size_t size_u = 0;
};

struct FilterStats {
  std::uint32_t q = 0;
  double epsilon = 0.5;
  std::uint32_t v_size = 0;
  std::uint64_t seed = 0;
  std::vector<FilterSample> samples;
  double max_ratio_to_sqrt_q = 0.0;
};

/// The V drawn for a given sample index; sub-seed = seed + sample.
inline ElementSet filter_sample_v(const Field& field, std::uint32_t v_size, std::uint64_t seed, std::uint64_t sample) {
  Rng rng(seed + sample);
  const auto picks = sample_indices(rng, field.q(), v_size);
  return ElementSet::from_indices(field.q(), picks);
}

inline FilterStats sample_filter_stats(const Field& field, double epsilon, std::uint64_t num_samples,
                                       std::uint64_t seed) {
  if (!(epsilon > 0.0 && epsilon <= 1.0)) throw Error(ErrorKind::DomainError, "epsilon must lie in (0, 1]");
  if (num_samples == 0) throw Error(ErrorKind::DomainError, "num_samples must be >= 1");
  FilterStats stats;
  stats.q = field.q();
  stats.epsilon = epsilon;
  stats.seed = seed;
  stats.v_size = filter_v_size(field.q(), epsilon);
  if (stats.v_size < 1) throw Error(ErrorKind::DomainError, "floor(q^{epsilon/2}) must be >= 1");
  const ResidueMasks masks(field);
  const double root_q = std::sqrt(static_cast<double>(field.q()));
  for (std::uint64_t s = 0; s < num_samples; ++s) {
    FilterSample rec;
    rec.sample = s;
    rec.v_set = filter_sample_v(field, stats.v_size, seed, s);
    rec.size_u = filter_set(masks, rec.v_set).count();
    stats.max_ratio_to_sqrt_q = std::max(stats.max_ratio_to_sqrt_q, static_cast<double>(rec.size_u) / root_q);
    stats.samples.push_back(std::move(rec));
  }
  return stats;
}

struct CharSumSample {
  std::uint64_t size_u = 0;
  std::uint64_t size_v = 0;
  std::int64_t lhs = 0;
  double rhs = 0.0;
  double ratio = 0.0;
  ElementSet u_set;
  ElementSet v_set;
};

struct CharSumReport {
  std::uint32_t q = 0;
  int nu = 1;
  std::uint64_t seed = 0;
  std::vector<CharSumSample> samples;
  double max_ratio = 0.0;
};

using SizeGrid = std::vector<std::pair<std::uint64_t, std::uint64_t>>;

/// For each grid entry draws `num_samples` (U, V) pairs; the sample with global
/// position i uses sub-seed seed + i and draws U then V from one stream.
inline CharSumReport sample_charsum_report(const Field& field, int nu, std::uint64_t num_samples,
                                           const SizeGrid& grid, std::uint64_t seed) {
  if (nu < 1) throw Error(ErrorKind::DomainError, "nu must be >= 1");
  if (num_samples == 0) throw Error(ErrorKind::DomainError, "num_samples must be >= 1");
  if (grid.empty()) throw Error(ErrorKind::DomainError, "size grid is empty");
  for (const auto& [su, sv] : grid)
    if (su < 1 || sv < 1 || su > field.q() || sv > field.q())
      throw Error(ErrorKind::DomainError, "grid sizes must lie in [1, q]");
  CharSumReport report;
  report.q = field.q();
  report.nu = nu;
  report.seed = seed;
  std::uint64_t position = 0;
  for (const auto& [su, sv] : grid) {
    for (std::uint64_t s = 0; s < num_samples; ++s, ++position) {
      Rng rng(seed + position);
      CharSumSample rec;
      rec.size_u = su;
      rec.size_v = sv;
      rec.u_set = ElementSet::from_indices(field.q(), sample_indices(rng, field.q(), static_cast<std::uint32_t>(su)));
      rec.v_set = ElementSet::from_indices(field.q(), sample_indices(rng, field.q(), static_cast<std::uint32_t>(sv)));
      rec.lhs = double_char_sum(field, rec.u_set, rec.v_set);
      rec.rhs = karatsuba_rhs(field.q(), su, sv, nu);
      rec.ratio = std::abs(static_cast<double>(rec.lhs)) / rec.rhs;
      report.max_ratio = std::max(report.max_ratio, rec.ratio);
      report.samples.push_back(std::move(rec));
    }
  }
  return report;
}

namespace detail {
inline std::string format_real(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}
}  // namespace detail

inline constexpr const char* kCharSumCsvHeader = "q,nu,size_u,size_v,lhs,rhs,ratio";
inline constexpr const char* kFilterCsvHeader = "q,epsilon,v_size,sample,size_u,ratio_sqrt_q";

inline std::string to_csv(const CharSumReport& report) {
  std::string out = std::string(kCharSumCsvHeader) + "\n";
  for (const auto& s : report.samples) {
    out += std::to_string(report.q) + "," + std::to_string(report.nu) + "," + std::to_string(s.size_u) + "," +
           std::to_string(s.size_v) + "," + std::to_string(s.lhs) + "," + detail::format_real(s.rhs) + "," +
           detail::format_real(s.ratio) + "\n";
  }
  return out;
}

inline std::string to_csv(const FilterStats& stats) {
  std::string out = std::string(kFilterCsvHeader) + "\n";
  const double root_q = std::sqrt(static_cast<double>(stats.q));
  for (const auto& s : stats.samples) {
    out += std::to_string(stats.q) + "," + detail::format_real(stats.epsilon) + "," + std::to_string(stats.v_size) +
           "," + std::to_string(s.sample) + "," + std::to_string(s.size_u) + "," +
           detail::format_real(static_cast<double>(s.size_u) / root_q) + "\n";
  }
  return out;
}

/// One parsed row of a charsum CSV.
struct CharSumRow {
  std::uint32_t q = 0;
  int nu = 0;
  std::uint64_t size_u = 0;
  std::uint64_t size_v = 0;
  std::int64_t lhs = 0;
  double rhs = 0.0;
  double ratio = 0.0;
};

inline std::vector<CharSumRow> parse_charsum_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) || line != kCharSumCsvHeader)
    throw Error(ErrorKind::ParseError, "charsum CSV header mismatch");
  std::vector<CharSumRow> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    CharSumRow r;
    unsigned long long su = 0, sv = 0;
    long long lhs = 0;
    unsigned q = 0;
    if (std::sscanf(line.c_str(), "%u,%d,%llu,%llu,%lld,%lf,%lf", &q, &r.nu, &su, &sv, &lhs, &r.rhs, &r.ratio) != 7)
      throw Error(ErrorKind::ParseError, "bad charsum CSV row: " + line);
    r.q = q;
    r.size_u = su;
    r.size_v = sv;
    r.lhs = lhs;
    rows.push_back(r);
  }
  return rows;
}

}  // namespace qrdecomp
