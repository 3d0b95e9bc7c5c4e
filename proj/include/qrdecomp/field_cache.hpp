// Copyright 2026 The qrdecomp Authors
// SPDX-License-Identifier: Apache-2.0

// Optional on-disk cache of per-field tables, enabled by QRDECOMP_CACHE_DIR.
// Files are keyed by (p, n, modulus, tool version); anything that fails the
// header or shape checks is ignored and rebuilt.

#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <string>

#include "qrdecomp/error.hpp"
#include "qrdecomp/field.hpp"

namespace qrdecomp {

inline constexpr char kCacheMagic[8] = {'Q', 'R', 'D', 'C', 'A', 'C', 'H', '1'};

inline std::filesystem::path field_cache_path(const std::filesystem::path& dir, std::uint32_t p, int n,
                                              const poly::Coeffs& modulus) {
  std::string name = "field-p" + std::to_string(p) + "-n" + std::to_string(n) + "-m";
  for (std::size_t i = 0; i < modulus.size(); ++i) name += (i ? "_" : "") + std::to_string(modulus[i]);
  name += "-v" + std::string(kToolVersion) + ".bin";
  return dir / name;
}

namespace detail {
template <typename T>
void write_pod(std::ofstream& out, const T& value) {
  out.write(reinterpret_cast<const char*>(&value), sizeof value);
}
template <typename T>
bool read_pod(std::ifstream& in, T& value) {
  return static_cast<bool>(in.read(reinterpret_cast<char*>(&value), sizeof value));
}
}  // namespace detail

inline void store_field_tables(const std::filesystem::path& file, const Field& field) {
  std::filesystem::create_directories(file.parent_path());
  const auto tmp = file.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) return;
    out.write(kCacheMagic, sizeof kCacheMagic);
    detail::write_pod(out, field.q());
    detail::write_pod(out, field.tables().generator);
    const auto exp_len = static_cast<std::uint64_t>(field.tables().exp.size());
    detail::write_pod(out, exp_len);
    out.write(reinterpret_cast<const char*>(field.tables().exp.data()),
              static_cast<std::streamsize>(exp_len * sizeof(Index)));
    out.write(reinterpret_cast<const char*>(field.tables().chi.data()), static_cast<std::streamsize>(field.q()));
  }
  std::error_code ec;
  std::filesystem::rename(tmp, file, ec);
}

inline std::optional<FieldTables> load_field_tables(const std::filesystem::path& file, Index q) {
  std::ifstream in(file, std::ios::binary);
  if (!in) return std::nullopt;
  char magic[sizeof kCacheMagic];
  if (!in.read(magic, sizeof magic) || !std::equal(magic, magic + sizeof magic, kCacheMagic)) return std::nullopt;
  Index stored_q = 0;
  FieldTables t;
  std::uint64_t exp_len = 0;
  if (!detail::read_pod(in, stored_q) || stored_q != q) return std::nullopt;
  if (!detail::read_pod(in, t.generator) || !detail::read_pod(in, exp_len)) return std::nullopt;
  if (exp_len != 0 && exp_len != q - 1) return std::nullopt;
  t.exp.resize(exp_len);
  t.chi.resize(q);
  if (!in.read(reinterpret_cast<char*>(t.exp.data()), static_cast<std::streamsize>(exp_len * sizeof(Index))))
    return std::nullopt;
  if (!in.read(reinterpret_cast<char*>(t.chi.data()), static_cast<std::streamsize>(q))) return std::nullopt;
  std::uint64_t positive = 0;
  for (auto v : t.chi) positive += (v == 1);
  if (t.chi[0] != 0 || positive != (q - 1) / 2) return std::nullopt;
  return t;
}

/// Builds F_{p^n}, going through the table cache when QRDECOMP_CACHE_DIR is set.
inline Field load_or_build_field(std::uint32_t p, int n) {
  const char* dir = std::getenv("QRDECOMP_CACHE_DIR");
  if (dir == nullptr || *dir == '\0') return Field(p, n);
  if (p == 2 || !is_prime(p)) throw Error(ErrorKind::NotOddPrime, "p = " + std::to_string(p));
  if (n < 1) throw Error(ErrorKind::DomainError, "extension degree must be >= 1");
  std::uint64_t q = 1;
  for (int i = 0; i < n; ++i) {
    q *= p;
    if (q > kMaxFieldSize) throw Error(ErrorKind::FieldTooLarge, "p^n exceeds 2^20");
  }
  const auto modulus = poly::least_monic_irreducible(n, p);
  const auto file = field_cache_path(dir, p, n, modulus);
  if (auto tables = load_field_tables(file, static_cast<Index>(q))) return Field(p, n, std::move(tables));
  Field field(p, n);
  store_field_tables(file, field);
  return field;
}

}  // namespace qrdecomp
