// Copyright 2026 The qrdecomp Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace qrdecomp {

inline constexpr std::string_view kToolVersion = "1.0.0";

enum class ErrorKind {
  NotOddPrime,
  FieldTooLarge,
  FieldTooLargeForOracle,
  IndexOutOfRange,
  FieldMismatch,
  EmptyA,
  EmptyV,
  DomainError,
  NotAResidue,
  DivisionByZero,
  ParseError,
  InvariantBreach,
};

constexpr std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotOddPrime: return "NotOddPrime";
    case ErrorKind::FieldTooLarge: return "FieldTooLarge";
    case ErrorKind::FieldTooLargeForOracle: return "FieldTooLargeForOracle";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::FieldMismatch: return "FieldMismatch";
    case ErrorKind::EmptyA: return "EmptyA";
    case ErrorKind::EmptyV: return "EmptyV";
    case ErrorKind::DomainError: return "DomainError";
    case ErrorKind::NotAResidue: return "NotAResidue";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::InvariantBreach: return "InvariantBreach";
  }
  return "Unknown";
}

/// All library failures are reported through this type; `kind()` tells callers
/// which contract was violated without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace qrdecomp
