// Copyright 2026 The qrdecomp Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <random>
#include <vector>

#include "oracles.hpp"
#include "qrdecomp/set_kernel.hpp"

namespace qrdecomp {
namespace {

ElementSet random_set(std::mt19937_64& rng, Index q, double density) {
  std::bernoulli_distribution coin(density);
  ElementSet s(q);
  for (Index i = 0; i < q; ++i)
    if (coin(rng)) s.insert(i);
  return s;
}

ElementSet from_oracle(Index q, const std::set<Index>& s) {
  return ElementSet::from_indices(q, std::vector<Index>(s.begin(), s.end()));
}

TEST(ElementSet, BasicOperations) {
  ElementSet s(70);
  s.insert(0);
  s.insert(64);
  s.insert(69);
  EXPECT_EQ(s.count(), 3U);
  EXPECT_TRUE(s.contains(64));
  s.erase(64);
  EXPECT_FALSE(s.contains(64));
  EXPECT_EQ(s.indices(), (std::vector<Index>{0, 69}));
  EXPECT_EQ(s.complement().count(), 68U);
  EXPECT_THROW(s.insert(70), Error);
  EXPECT_THROW(s &= ElementSet(71), Error);
}

TEST(ElementSet, LiteralFormat) {
  const auto s = ElementSet::parse_literal(7, "1,2,4");
  EXPECT_EQ(s.indices(), (std::vector<Index>{1, 2, 4}));
  EXPECT_EQ(s.to_literal(), "1,2,4");
  EXPECT_EQ(ElementSet::parse_literal(7, "").count(), 0U);
  EXPECT_EQ(ElementSet(7).to_literal(), "");
  EXPECT_THROW(ElementSet::parse_literal(7, "2,1"), Error);
  EXPECT_THROW(ElementSet::parse_literal(7, "1,1"), Error);
  EXPECT_THROW(ElementSet::parse_literal(7, "1,,2"), Error);
  EXPECT_THROW(ElementSet::parse_literal(7, "1,x"), Error);
  EXPECT_THROW(ElementSet::parse_literal(7, "7"), Error);
}

TEST(ElementSet, LiteralRoundTripProperty) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    const Index q = 3 + static_cast<Index>(rng() % 300);
    const auto s = random_set(rng, q, 0.3);
    ASSERT_EQ(ElementSet::parse_literal(q, s.to_literal()), s);
  }
}

TEST(ElementSet, RotationMatchesModularShift) {
  std::mt19937_64 rng(11);
  for (Index q : {3U, 7U, 63U, 64U, 65U, 127U, 131U, 1009U}) {
    for (int trial = 0; trial < 20; ++trial) {
      const auto s = random_set(rng, q, 0.4);
      const Index shift = static_cast<Index>(rng() % q);
      ElementSet expected(q);
      s.for_each([&](Index x) { expected.insert((x + shift) % q); });
      ASSERT_EQ(s.rotated(shift), expected) << "q=" << q << " shift=" << shift;
    }
  }
}

TEST(SetKernel, SumsetExamples) {
  const Field f = build_field(7, 1);
  const auto b = ElementSet::parse_literal(7, "0,3,5");
  EXPECT_EQ(sumset(f, ElementSet::parse_literal(7, "0"), b), b);
  EXPECT_EQ(sumset(f, ElementSet::parse_literal(7, "1,2"), ElementSet::parse_literal(7, "0,3")).to_literal(),
            "1,2,4,5");
  EXPECT_TRUE(sumset(f, ElementSet(7), b).empty());
  EXPECT_THROW(sumset(f, ElementSet(7), ElementSet(9)), Error);
}

TEST(SetKernel, SumsetMatchesPairwiseOracle) {
  std::mt19937_64 rng(3);
  for (auto [p, n] : std::vector<std::pair<std::uint32_t, int>>{{7, 1}, {3, 2}, {3, 3}, {5, 2}, {131, 1}}) {
    const Field f(p, n);
    for (int trial = 0; trial < 50; ++trial) {
      const auto a = random_set(rng, f.q(), 0.2);
      const auto b = random_set(rng, f.q(), 0.2);
      const auto expected = oracle::pairwise_sums(f, a.indices(), b.indices());
      ASSERT_EQ(sumset(f, a, b), from_oracle(f.q(), expected));
      ASSERT_EQ(sumset(f, a, b), sumset(f, b, a));
      if (!a.empty() && !b.empty()) {
        ASSERT_GE(sumset(f, a, b).count(), std::max(a.count(), b.count()));
      }
    }
  }
}

TEST(SetKernel, CauchyDavenportHoldsInPrimeFields) {
  std::mt19937_64 rng(5);
  for (Index p : {5U, 7U, 11U, 13U, 101U}) {
    const Field f(p, 1);
    for (int trial = 0; trial < 200; ++trial) {
      const auto a = random_set(rng, p, 0.15);
      const auto b = random_set(rng, p, 0.15);
      if (a.empty() || b.empty()) continue;
      ASSERT_GE(sumset(f, a, b).count(), std::min<std::size_t>(p, a.count() + b.count() - 1));
    }
  }
}

TEST(SetKernel, IsDecompositionExamples) {
  const Field f7 = build_field(7, 1);
  EXPECT_FALSE(is_decomposition(f7, ElementSet::parse_literal(7, "1,2"), ElementSet::parse_literal(7, "0,3")));
  EXPECT_FALSE(is_decomposition(f7, ElementSet::parse_literal(7, "1"), f7.residue_set()));
  const Field f5 = build_field(5, 1);
  EXPECT_FALSE(is_decomposition(f5, ElementSet::parse_literal(5, "0,1"), ElementSet::parse_literal(5, "0,1")));
  const Field f9 = build_field(3, 2);
  EXPECT_TRUE(is_decomposition(f9, ElementSet::parse_literal(9, "0,4"), ElementSet::parse_literal(9, "2,6")));
}

TEST(SetKernel, MaxCompatibleExamples) {
  const Field f = build_field(7, 1);
  const ResidueMasks masks(f);
  EXPECT_EQ(max_compatible_B(masks, ElementSet::parse_literal(7, "1,2")).to_literal(), "0");
  EXPECT_EQ(max_compatible_B(f, ElementSet::parse_literal(7, "1,2")).to_literal(), "0");
  EXPECT_EQ(max_compatible_B(masks, ElementSet::parse_literal(7, "0")), f.residue_set());
  EXPECT_EQ(masks.minus(1).to_literal(), "0,1,3");
  EXPECT_EQ(masks.minus(2).to_literal(), "0,2,6");
  try {
    max_compatible_B(masks, ElementSet(7));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::EmptyA);
  }
}

TEST(SetKernel, CharacterizationExhaustiveOverFive) {
  // A + B inside Q  <=>  B inside B*(A), for every pair of nonempty sets.
  const Field f = build_field(5, 1);
  const ResidueMasks masks(f);
  for (std::uint32_t am = 1; am < 32; ++am) {
    const auto a = ElementSet::from_indices(5, oracle::members(am, 5));
    const auto bstar = max_compatible_B(masks, a);
    ASSERT_TRUE(sumset(f, a, bstar).is_subset_of(f.residue_set()));
    for (std::uint32_t bm = 1; bm < 32; ++bm) {
      const auto b = ElementSet::from_indices(5, oracle::members(bm, 5));
      ASSERT_EQ(sumset(f, a, b).is_subset_of(f.residue_set()), b.is_subset_of(bstar));
    }
  }
}

TEST(SetKernel, CharacterizationAndMonotonicitySampled) {
  std::mt19937_64 rng(13);
  for (auto [p, n] : std::vector<std::pair<std::uint32_t, int>>{{7, 1}, {3, 2}, {11, 1}, {13, 1}}) {
    const Field f(p, n);
    const ResidueMasks masks(f);
    for (int trial = 0; trial < 500; ++trial) {
      auto a = random_set(rng, f.q(), 0.25);
      const auto b = random_set(rng, f.q(), 0.25);
      if (a.empty() || b.empty()) continue;
      const auto bstar = max_compatible_B(masks, a);
      ASSERT_EQ(sumset(f, a, b).is_subset_of(f.residue_set()), b.is_subset_of(bstar));
      const auto bigger = a | random_set(rng, f.q(), 0.2);
      ASSERT_TRUE(max_compatible_B(masks, bigger).is_subset_of(bstar));
    }
  }
}

TEST(SetKernel, UncachedTranslatesAgreeWithCached) {
  // 3^9 = 19683 is above the cache threshold, so translates are built on demand.
  const Field big(3, 9);
  const ResidueMasks masks(big);
  EXPECT_FALSE(masks.cached());
  const Field small(3, 4);
  EXPECT_TRUE(ResidueMasks(small).cached());
  for (Index a : {0U, 1U, 5U, 1234U, 19682U}) {
    const auto m = masks.minus(a);
    EXPECT_EQ(m.count(), (big.q() - 1) / 2);
    for (Index b : {0U, 2U, 77U, 9999U}) EXPECT_EQ(m.contains(b), big.chi({big.add_index(a, b)}) == 1);
  }
}

}  // namespace
}  // namespace qrdecomp
