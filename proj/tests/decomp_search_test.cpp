// Copyright 2026 The qrdecomp Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <algorithm>
#include <vector>

#include "oracles.hpp"
#include "qrdecomp/certificate_io.hpp"
#include "qrdecomp/decomp_search.hpp"

namespace qrdecomp {
namespace {

SearchConfig count_all() {
  SearchConfig c;
  c.mode = SearchMode::count_all;
  return c;
}

bool same_certificates(const SearchReport& x, const SearchReport& y) {
  if (x.certificates.size() != y.certificates.size()) return false;
  for (std::size_t i = 0; i < x.certificates.size(); ++i)
    if (x.certificates[i].a != y.certificates[i].a || x.certificates[i].b != y.certificates[i].b) return false;
  return true;
}

std::uint64_t total(const SizeCounts& counts) {
  std::uint64_t t = 0;
  for (const auto& [km, c] : counts) t += c;
  return t;
}

TEST(Search, ThreeHasNoDecomposition) {
  const Field f = build_field(3, 1);
  for (auto mode : {SearchMode::decide, SearchMode::enumerate_maximal, SearchMode::count_all}) {
    SearchConfig c;
    c.mode = mode;
    const auto r = search(f, c);
    EXPECT_FALSE(r.found());
  }
  EXPECT_EQ(*search(f, count_all()).n_q, 0U);
}

TEST(Search, SmallPrimesMatchFullPairEnumeration) {
  for (Index p : {5U, 7U}) {
    const Field f(p, 1);
    const auto expected = oracle::decompositions_by_size(f);
    EXPECT_TRUE(expected.empty());
    const auto r = search(f, count_all());
    EXPECT_EQ(*r.n_q, 0U);
    EXPECT_FALSE(r.found());
    EXPECT_EQ(*naive_search(f).n_q, 0U);
  }
}

TEST(Search, NineMatchesFullPairEnumeration) {
  const Field f = build_field(3, 2);
  const auto expected = oracle::decompositions_by_size(f);
  // Frozen from the enumeration above (also reproduced by a standalone script).
  ASSERT_EQ(total(expected), 18U);
  const auto r = search(f, count_all());
  EXPECT_EQ(*r.n_q, 18U);
  EXPECT_EQ(r.n_by_size, expected);
  const auto naive = naive_search(f);
  EXPECT_EQ(naive.n_by_size, expected);
  EXPECT_TRUE(same_certificates(r, naive));
}

TEST(Search, AgreesWithOracleAcrossPruningConfigurations) {
  for (auto [p, n] : std::vector<std::pair<std::uint32_t, int>>{{5, 1}, {7, 1}, {3, 2}, {11, 1}}) {
    const Field f(p, n);
    for (auto mode : {SearchMode::decide, SearchMode::enumerate_maximal, SearchMode::count_all}) {
      const auto naive = naive_search(f, mode);
      for (int flags = 0; flags < 16; ++flags) {
        SearchConfig c;
        c.mode = mode;
        c.use_cauchy_davenport = flags & 1;
        c.use_sarkozy_window = flags & 2;
        c.use_filter_pruning = flags & 4;
        c.symmetry_reduction = flags & 8;
        const auto r = search(f, c);
        EXPECT_EQ(r.n_q, naive.n_q) << f.q() << " flags " << flags;
        EXPECT_EQ(r.n_by_size, naive.n_by_size) << f.q() << " flags " << flags;
        EXPECT_TRUE(same_certificates(r, naive)) << f.q() << " flags " << flags;
      }
    }
  }
}

TEST(Search, CertificatesAreClosedAndReverified) {
  const Field f = build_field(5, 2);
  const auto r = search(f, count_all());
  const ResidueMasks masks(f);
  for (const auto& c : r.certificates) {
    EXPECT_TRUE(c.verified);
    EXPECT_TRUE(reverify_decomposition(f, c.a, c.b));
    EXPECT_TRUE(is_decomposition(f, c.a, c.b));
    EXPECT_EQ(max_compatible_B(masks, c.a), c.b);
    EXPECT_EQ(max_compatible_B(masks, c.b), c.a);
  }
  if (r.n_q) {
    EXPECT_EQ(*r.n_q == 0, r.certificates.empty());
  }
}

TEST(Search, InclusionExclusionMatchesDirectCounting) {
  for (auto [p, n] : std::vector<std::pair<std::uint32_t, int>>{{3, 2}, {5, 2}, {3, 3}, {7, 2}}) {
    const Field f(p, n);
    const auto direct = search(f, count_all());
    SearchConfig ie = count_all();
    ie.brute_force_limit = 0;
    const auto by_ie = search(f, ie);
    ASSERT_FALSE(by_ie.limit_exceeded);
    EXPECT_EQ(by_ie.n_q, direct.n_q) << f.q();
    EXPECT_EQ(by_ie.n_by_size, direct.n_by_size) << f.q();
  }
}

TEST(Search, CountingLimitIsReportedNotTruncated) {
  const Field f = build_field(3, 2);
  SearchConfig c = count_all();
  c.brute_force_limit = 0;
  c.inclusion_exclusion_limit = 0;
  const auto r = search(f, c);
  EXPECT_TRUE(r.limit_exceeded);
  EXPECT_FALSE(r.n_q.has_value());
}

TEST(Search, SwapAndScalingSymmetry) {
  for (auto [p, n] : std::vector<std::pair<std::uint32_t, int>>{{3, 2}, {5, 2}, {3, 3}}) {
    const Field f(p, n);
    SearchConfig c;
    c.mode = SearchMode::enumerate_maximal;
    const auto r = search(f, c);
    auto has = [&](const ElementSet& a, const ElementSet& b) {
      return std::any_of(r.certificates.begin(), r.certificates.end(),
                         [&](const auto& cert) { return cert.a == a && cert.b == b; });
    };
    for (const auto& cert : r.certificates) {
      EXPECT_TRUE(has(cert.b, cert.a));
      f.residue_set().for_each([&](Index s) {
        const auto [sa, sb] = scaling_orbit(f, cert.a, cert.b, {s});
        EXPECT_TRUE(has(sa, sb));
      });
    }
    const auto counted = search(f, count_all());
    for (const auto& [km, count] : counted.n_by_size) EXPECT_EQ(counted.n_by_size.at({km.second, km.first}), count);
  }
}

TEST(Search, ParallelRunIsIdenticalToSerial) {
  const Field f = build_field(5, 2);
  for (auto mode : {SearchMode::decide, SearchMode::count_all}) {
    SearchConfig serial;
    serial.mode = mode;
    SearchConfig parallel = serial;
    parallel.jobs = 4;
    const auto a = report_to_json(f, search(f, serial));
    const auto b = report_to_json(f, search(f, parallel));
    EXPECT_EQ(strip_timing(a).dump(), strip_timing(b).dump());
  }
}

TEST(Search, DecideReturnsClosureOfFirstQualifyingSet) {
  const Field f = build_field(3, 2);
  const auto r = search(f, SearchConfig{});
  ASSERT_EQ(r.certificates.size(), 1U);
  EXPECT_EQ(r.certificates[0].a.to_literal(), "0,4");
  EXPECT_EQ(r.certificates[0].b.to_literal(), "2,6");
  EXPECT_FALSE(r.n_q.has_value());
}

TEST(Search, WindowCap) {
  EXPECT_EQ(sarkozy_size_cap(3), 2U);
  EXPECT_EQ(sarkozy_size_cap(101), 47U);
  SearchConfig c = count_all();
  c.use_sarkozy_window = true;
  EXPECT_TRUE(search(build_field(13, 1), c).theorem_dependent);
  EXPECT_FALSE(search(build_field(3, 2), c).theorem_dependent);  // prime fields only
}

TEST(NaiveSearch, RejectsLargeFields) {
  try {
    naive_search(build_field(19, 1));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::FieldTooLargeForOracle);
  }
  EXPECT_THROW(count_by_size(build_field(19, 1), 2, 2), Error);
}

TEST(CountBySize, ExamplesAndSwapSymmetry) {
  EXPECT_EQ(count_by_size(build_field(7, 1), 2, 2), 0U);
  EXPECT_EQ(count_by_size(build_field(5, 1), 3, 3), 0U);
  const Field f9 = build_field(3, 2);
  EXPECT_EQ(count_by_size(f9, 2, 2), 18U);
  for (std::size_t k = 2; k <= 5; ++k)
    for (std::size_t m = 2; m <= 5; ++m) EXPECT_EQ(count_by_size(f9, k, m), count_by_size(f9, m, k));
  EXPECT_THROW(count_by_size(f9, 1, 2), Error);
}

TEST(Shkredov, PrimesHaveNoSelfDecomposition) {
  for (Index p : {3U, 7U, 11U, 13U}) {
    const auto r = shkredov_search(build_field(p, 1));
    EXPECT_FALSE(r.found()) << p;
    EXPECT_EQ(*r.n_q, 0U);
  }
}

TEST(Shkredov, MatchesBruteForceOverSmallFields) {
  for (auto [p, n] : std::vector<std::pair<std::uint32_t, int>>{{5, 1}, {7, 1}, {3, 2}, {11, 1}, {13, 1}}) {
    const Field f(p, n);
    const auto sq = oracle::squares(f);
    std::vector<std::string> expected;
    for (std::uint32_t m = 0; m < (1U << f.q()); ++m) {
      const auto a = oracle::members(m, f.q());
      if (a.size() >= 2 && oracle::pairwise_sums(f, a, a) == sq)
        expected.push_back(ElementSet::from_indices(f.q(), a).to_literal());
    }
    std::vector<std::string> got;
    for (const auto& c : shkredov_search(f).certificates) {
      EXPECT_EQ(c.a, c.b);
      EXPECT_TRUE(c.verified);
      got.push_back(c.a.to_literal());
    }
    std::sort(expected.begin(), expected.end());
    std::sort(got.begin(), got.end());
    EXPECT_EQ(got, expected) << f.q();
  }
}

TEST(ScalingOrbit, Examples) {
  const Field f = build_field(7, 1);
  const auto a = ElementSet::parse_literal(7, "1,2");
  const auto b = ElementSet::parse_literal(7, "0,3");
  const auto [a1, b1] = scaling_orbit(f, a, b, {1});
  EXPECT_EQ(a1, a);
  EXPECT_EQ(b1, b);
  const auto [a2, b2] = scaling_orbit(f, a, b, {2});
  EXPECT_EQ(a2.to_literal(), "2,4");
  EXPECT_EQ(b2.to_literal(), "0,6");
  try {
    scaling_orbit(f, a, b, {3});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotAResidue);
  }
  EXPECT_THROW(scaling_orbit(f, a, b, {0}), Error);
}

TEST(ScalingOrbit, PreservesDecompositions) {
  const Field f = build_field(3, 2);
  const auto r = search(f, count_all());
  for (const auto& c : r.certificates)
    f.residue_set().for_each([&](Index s) {
      const auto [sa, sb] = scaling_orbit(f, c.a, c.b, {s});
      EXPECT_TRUE(is_decomposition(f, sa, sb));
    });
}

}  // namespace
}  // namespace qrdecomp
