// Copyright 2026 The qrdecomp Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <memory>
#include <vector>

#include "qrdecomp/element_set.hpp"
#include "qrdecomp/error.hpp"
#include "qrdecomp/field.hpp"

namespace qrdecomp {

/// Fields up to this size keep every translate Q - a in memory.
inline constexpr Index kTranslateCacheMaxQ = 1U << 13;

inline void require_field(const Field& field, const ElementSet& s) {
  if (s.universe() != field.q())
    throw Error(ErrorKind::FieldMismatch, "set over F_" + std::to_string(s.universe()) +
                                              " used with F_" + std::to_string(field.q()));
}

/// { x + shift : x in s }.
inline ElementSet translate(const Field& field, const ElementSet& s, Index shift) {
  require_field(field, s);
  if (field.is_prime_field()) return s.rotated(shift);
  ElementSet out(field.q());
  s.for_each([&](Index x) { out.insert(field.add_index(x, shift)); });
  return out;
}

/// The residue set and its translates Q - a, cached for small fields.
class ResidueMasks {
 public:
  explicit ResidueMasks(const Field& field) : field_(&field), residues_(field.residue_set()) {
    if (field.q() <= kTranslateCacheMaxQ) {
      shifted_.reserve(field.q());
      for (Index a = 0; a < field.q(); ++a) shifted_.push_back(compute(a));
    }
  }

  const Field& field() const noexcept { return *field_; }
  const ElementSet& residues() const noexcept { return residues_; }
  bool cached() const noexcept { return !shifted_.empty(); }

  /// Q - a = { b : a + b in Q }.
  ElementSet minus(Index a) const { return cached() ? shifted_[a] : compute(a); }

  /// s &= (Q - a) without a copy when cached.
  void intersect_minus(ElementSet& s, Index a) const {
    if (cached()) {
      s &= shifted_[a];
    } else {
      s &= compute(a);
    }
  }
  std::size_t count_with_minus(const ElementSet& s, Index a) const {
    return cached() ? s.intersection_count(shifted_[a]) : s.intersection_count(compute(a));
  }

 private:
  ElementSet compute(Index a) const { return translate(*field_, residues_, field_->neg_index(a)); }

  const Field* field_;
  ElementSet residues_;
  std::vector<ElementSet> shifted_;
};

/// A + B, iterating the smaller operand and OR-ing translates of the larger.
/// An empty operand yields the empty set.
inline ElementSet sumset(const Field& field, const ElementSet& a, const ElementSet& b) {
  require_field(field, a);
  require_field(field, b);
  const bool a_small = a.count() <= b.count();
  const ElementSet& small = a_small ? a : b;
  const ElementSet& large = a_small ? b : a;
  ElementSet out(field.q());
  small.for_each([&](Index s) { out |= translate(field, large, s); });
  return out;
}

/// Decomposition test: #A >= 2, #B >= 2 and A + B = Q.
inline bool is_decomposition(const Field& field, const ElementSet& a, const ElementSet& b) {
  require_field(field, a);
  require_field(field, b);
  if (a.count() < 2 || b.count() < 2) return false;
  return sumset(field, a, b) == field.residue_set();
}

/// B*(A) = intersection of Q - a over a in A; the largest B with A + B inside Q.
inline ElementSet max_compatible_B(const ResidueMasks& masks, const ElementSet& a) {
  require_field(masks.field(), a);
  if (a.empty()) throw Error(ErrorKind::EmptyA, "max_compatible_B needs a nonempty A");
  ElementSet out = ElementSet::full(a.universe());
  a.for_each([&](Index x) { masks.intersect_minus(out, x); });
  return out;
}

inline ElementSet max_compatible_B(const Field& field, const ElementSet& a) {
  require_field(field, a);
  if (a.empty()) throw Error(ErrorKind::EmptyA, "max_compatible_B needs a nonempty A");
  ElementSet out = ElementSet::full(field.q());
  const ElementSet& residues = field.residue_set();
  a.for_each([&](Index x) { out &= translate(field, residues, field.neg_index(x)); });
  return out;
}

}  // namespace qrdecomp
