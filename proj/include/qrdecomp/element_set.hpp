// Copyright 2026 The qrdecomp Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <bit>
#include <charconv>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qrdecomp/error.hpp"

namespace qrdecomp {

using Index = std::uint32_t;

/// A subset of F_q stored as q bits, bit i set iff element index i is a member.
/// Bits at positions >= q are always zero.
class ElementSet {
 public:
  using Word = std::uint64_t;
  static constexpr unsigned kWordBits = 64;

  ElementSet() = default;
  explicit ElementSet(Index q) : q_(q), words_((q + kWordBits - 1) / kWordBits, 0) {}

  static ElementSet from_indices(Index q, std::span<const Index> members) {
    ElementSet s(q);
    for (Index i : members) s.insert(i);
    return s;
  }
  static ElementSet from_indices(Index q, std::initializer_list<Index> members) {
    return from_indices(q, std::span<const Index>(members.begin(), members.size()));
  }
  static ElementSet full(Index q) {
    ElementSet s(q);
    std::fill(s.words_.begin(), s.words_.end(), ~Word{0});
    s.clear_tail();
    return s;
  }

  Index universe() const noexcept { return q_; }
  std::span<const Word> words() const noexcept { return words_; }
  std::span<Word> words() noexcept { return words_; }

  bool contains(Index i) const {
    check(i);
    return (words_[i / kWordBits] >> (i % kWordBits)) & 1U;
  }
  void insert(Index i) {
    check(i);
    words_[i / kWordBits] |= Word{1} << (i % kWordBits);
  }
  void erase(Index i) {
    check(i);
    words_[i / kWordBits] &= ~(Word{1} << (i % kWordBits));
  }
  void toggle(Index i) {
    check(i);
    words_[i / kWordBits] ^= Word{1} << (i % kWordBits);
  }

  std::size_t count() const noexcept {
    std::size_t c = 0;
    for (Word w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  bool empty() const noexcept {
    return std::all_of(words_.begin(), words_.end(), [](Word w) { return w == 0; });
  }

  /// Count of members of (*this & other) without materializing it.
  std::size_t intersection_count(const ElementSet& other) const {
    require_same(other);
    std::size_t c = 0;
    for (std::size_t i = 0; i < words_.size(); ++i)
      c += static_cast<std::size_t>(std::popcount(words_[i] & other.words_[i]));
    return c;
  }

  bool is_subset_of(const ElementSet& other) const {
    require_same(other);
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~other.words_[i]) return false;
    return true;
  }

  ElementSet& operator&=(const ElementSet& other) {
    require_same(other);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
    return *this;
  }
  ElementSet& operator|=(const ElementSet& other) {
    require_same(other);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
    return *this;
  }
  friend ElementSet operator&(ElementSet a, const ElementSet& b) { return a &= b; }
  friend ElementSet operator|(ElementSet a, const ElementSet& b) { return a |= b; }

  ElementSet complement() const {
    ElementSet out(*this);
    for (Word& w : out.words_) w = ~w;
    out.clear_tail();
    return out;
  }

  friend bool operator==(const ElementSet& a, const ElementSet& b) {
    return a.q_ == b.q_ && a.words_ == b.words_;
  }

  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      Word bits = words_[w];
      while (bits != 0) {
        const unsigned bit = static_cast<unsigned>(std::countr_zero(bits));
        f(static_cast<Index>(w * kWordBits + bit));
        bits &= bits - 1;
      }
    }
  }

  std::vector<Index> indices() const {
    std::vector<Index> out;
    out.reserve(count());
    for_each([&](Index i) { out.push_back(i); });
    return out;
  }

  /// Cyclic rotation towards higher indices: bit i moves to (i + shift) mod q.
  ElementSet rotated(Index shift) const {
    if (q_ == 0) return *this;
    shift %= q_;
    if (shift == 0) return *this;
    ElementSet out(q_);
    shift_or_into(out, shift, true);
    shift_or_into(out, q_ - shift, false);
    out.clear_tail();
    return out;
  }

  /// Set literal: comma-separated indices in increasing order, e.g. "1,2,4".
  std::string to_literal() const {
    std::string out;
    for_each([&](Index i) {
      if (!out.empty()) out.push_back(',');
      out += std::to_string(i);
    });
    return out;
  }

  static ElementSet parse_literal(Index q, std::string_view text) {
    ElementSet s(q);
    if (text.empty()) return s;
    long long previous = -1;
    std::size_t pos = 0;
    while (pos <= text.size()) {
      const std::size_t comma = std::min(text.find(',', pos), text.size());
      const std::string_view token = text.substr(pos, comma - pos);
      Index value = 0;
      const auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
      if (token.empty() || ec != std::errc{} || end != token.data() + token.size())
        throw Error(ErrorKind::ParseError, "bad set literal element '" + std::string(token) + "'");
      if (value >= q) throw Error(ErrorKind::IndexOutOfRange, "set literal element out of range");
      if (static_cast<long long>(value) <= previous)
        throw Error(ErrorKind::ParseError, "set literal must be strictly increasing");
      previous = value;
      s.insert(value);
      pos = comma + 1;
    }
    return s;
  }

 private:
  void check(Index i) const {
    if (i >= q_) throw Error(ErrorKind::IndexOutOfRange, "element index " + std::to_string(i));
  }
  void require_same(const ElementSet& other) const {
    if (q_ != other.q_) throw Error(ErrorKind::FieldMismatch, "sets over different fields");
  }
  void clear_tail() {
    const unsigned tail = q_ % kWordBits;
    if (tail != 0 && !words_.empty()) words_.back() &= (Word{1} << tail) - 1;
  }
  // ORs (*this << shift) or (*this >> shift) into out, truncated to the word array.
  void shift_or_into(ElementSet& out, Index shift, bool left) const {
    const std::size_t n = words_.size();
    const std::size_t word_shift = shift / kWordBits;
    const unsigned bit_shift = shift % kWordBits;
    for (std::size_t i = 0; i < n; ++i) {
      if (left) {
        const std::size_t dst = i + word_shift;
        if (dst >= n) break;
        out.words_[dst] |= words_[i] << bit_shift;
        if (bit_shift != 0 && dst + 1 < n) out.words_[dst + 1] |= words_[i] >> (kWordBits - bit_shift);
      } else {
        if (i < word_shift) continue;
        const std::size_t dst = i - word_shift;
        out.words_[dst] |= words_[i] >> bit_shift;
        if (bit_shift != 0 && dst > 0) out.words_[dst - 1] |= words_[i] << (kWordBits - bit_shift);
      }
    }
  }

  Index q_ = 0;
  std::vector<Word> words_;
};

/// Lexicographic order on sorted member lists; a proper prefix sorts first.
inline bool lex_less(const ElementSet& a, const ElementSet& b) {
  const auto ia = a.indices();
  const auto ib = b.indices();
  return std::lexicographical_compare(ia.begin(), ia.end(), ib.begin(), ib.end());
}

}  // namespace qrdecomp
