// Copyright 2026 The qrdecomp Authors
// SPDX-License-Identifier: Apache-2.0

// Exhaustive search for additive decompositions Q = A + B of the quadratic
// residues of F_q.
//
// The search walks sets A in increasing-index depth-first order and carries
// B*(A), the largest B with A + B inside Q. Every pruning rule removes only
// subtrees that contain no A with A + B*(A) = Q, so the set of qualifying A
// (and therefore every count and certificate) is independent of the rules
// switched on.
//
// Certificates are Galois-closed pairs: B = B*(A) and A = B*(B). Every
// decomposition (A, B) lies inside the closed pair (B*(B*(A)), B*(A)).

#pragma once

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <thread>
#include <utility>
#include <vector>

#include "qrdecomp/element_set.hpp"
#include "qrdecomp/error.hpp"
#include "qrdecomp/field.hpp"
#include "qrdecomp/set_kernel.hpp"

namespace qrdecomp {

enum class SearchMode { decide, enumerate_maximal, count_all, shkredov };

constexpr std::string_view to_string(SearchMode mode) {
  switch (mode) {
    case SearchMode::decide: return "decide";
    case SearchMode::enumerate_maximal: return "enumerate-maximal";
    case SearchMode::count_all: return "count-all";
    case SearchMode::shkredov: return "shkredov";
  }
  return "unknown";
}

inline SearchMode parse_search_mode(std::string_view text) {
  for (auto m : {SearchMode::decide, SearchMode::enumerate_maximal, SearchMode::count_all, SearchMode::shkredov})
    if (to_string(m) == text) return m;
  throw Error(ErrorKind::ParseError, "unknown mode '" + std::string(text) + "'");
}

struct SearchConfig {
  bool use_cauchy_davenport = true;  // forced off for n > 1
  bool use_sarkozy_window = false;
  bool use_filter_pruning = true;
  bool symmetry_reduction = false;
  SearchMode mode = SearchMode::decide;
  unsigned jobs = 1;
  // count-all: direct subset enumeration up to this #B*, inclusion-exclusion above it.
  std::size_t brute_force_limit = 20;
  // count-all: maximum number of irredundant covering constraints for inclusion-exclusion.
  std::size_t inclusion_exclusion_limit = 24;
};

struct DecompositionCertificate {
  Index q = 0;
  ElementSet a;
  ElementSet b;
  bool verified = false;
};

/// (#A, #B) -> number of ordered pairs.
using SizeCounts = std::map<std::pair<std::size_t, std::size_t>, std::uint64_t>;

namespace prune {
inline constexpr std::size_t kMinBSize = 0;
inline constexpr std::size_t kCoverage = 1;
inline constexpr std::size_t kSarkozyWindow = 2;
inline constexpr std::size_t kFilter = 3;
inline constexpr std::size_t kCauchyDavenport = 4;
inline constexpr std::size_t kSymmetry = 5;
inline constexpr std::size_t kCount = 6;
inline constexpr std::array<std::string_view, kCount> kNames = {
    "min_b_size", "coverage", "sarkozy_window", "filter", "cauchy_davenport", "symmetry"};
}  // namespace prune

struct SearchReport {
  Index q = 0;
  SearchConfig config;
  std::vector<DecompositionCertificate> certificates;
  std::optional<std::uint64_t> n_q;
  SizeCounts n_by_size;
  std::uint64_t nodes_explored = 0;
  std::map<std::string, std::uint64_t> pruned_by;
  double wall_ms = 0.0;
  bool limit_exceeded = false;
  bool theorem_dependent = false;  // the Sarkozy window was used to cut the tree

  bool found() const noexcept { return !certificates.empty(); }
};

/// Decomposition check that shares nothing with the bit-vector kernel: Q by
/// squaring, sums by pairwise addition.
inline bool reverify_decomposition(const Field& field, const ElementSet& a, const ElementSet& b) {
  if (a.universe() != field.q() || b.universe() != field.q()) return false;
  if (a.count() < 2 || b.count() < 2) return false;
  std::vector<bool> is_square(field.q(), false);
  for (Index x = 1; x < field.q(); ++x) is_square[field.mul_index(x, x)] = true;
  std::vector<bool> hit(field.q(), false);
  const auto bs = b.indices();
  bool inside = true;
  a.for_each([&](Index x) {
    for (Index y : bs) {
      const Index s = field.add_index(x, y);
      if (!is_square[s]) inside = false;
      hit[s] = true;
    }
  });
  if (!inside) return false;
  for (Index x = 1; x < field.q(); ++x)
    if (is_square[x] && !hit[x]) return false;
  return true;
}

inline ElementSet scale_set(const Field& field, const ElementSet& s, Index c) {
  ElementSet out(field.q());
  s.for_each([&](Index x) { out.insert(field.mul_index(x, c)); });
  return out;
}

/// (cA, cB) for a nonzero square c.
inline std::pair<ElementSet, ElementSet> scaling_orbit(const Field& field, const ElementSet& a, const ElementSet& b,
                                                       Element c) {
  require_field(field, a);
  require_field(field, b);
  if (field.chi(c) != 1) throw Error(ErrorKind::NotAResidue, "scaling factor " + std::to_string(c.index));
  return {scale_set(field, a, c.index), scale_set(field, b, c.index)};
}

/// Upper cap on #A for prime q: ceil(sqrt(q) ln q).
inline std::size_t sarkozy_size_cap(Index q) {
  const double cap = std::ceil(std::sqrt(static_cast<double>(q)) * std::log(static_cast<double>(q)));
  return static_cast<std::size_t>(cap);
}

namespace detail {

inline bool cert_less(const DecompositionCertificate& x, const DecompositionCertificate& y) {
  if (x.a != y.a) return lex_less(x.a, y.a);
  return lex_less(x.b, y.b);
}

inline void finalize_certificates(const Field& field, std::vector<DecompositionCertificate>& certs, bool same_sets) {
  std::sort(certs.begin(), certs.end(), cert_less);
  certs.erase(std::unique(certs.begin(), certs.end(),
                          [](const auto& x, const auto& y) { return x.a == y.a && x.b == y.b; }),
              certs.end());
  for (auto& c : certs) {
    c.q = field.q();
    c.verified = reverify_decomposition(field, c.a, c.b) && (!same_sets || c.a == c.b);
    if (!c.verified) throw Error(ErrorKind::InvariantBreach, "search emitted an unverifiable certificate");
  }
}

/// Binomial table as 128-bit integers, rows 0..n.
inline std::vector<std::vector<__int128>> binomial_rows(std::size_t n) {
  std::vector<std::vector<__int128>> c(n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    c[i].assign(i + 1, 1);
    for (std::size_t j = 1; j < i; ++j) c[i][j] = c[i - 1][j - 1] + c[i - 1][j];
  }
  return c;
}

struct CompletionCounts {
  std::vector<std::uint64_t> by_size;  // index m = #B
  bool limit_exceeded = false;
};

/// Number of B inside bstar, by size, with A + B = Q. Requires A + bstar inside Q.
/// Each x in Q imposes "B meets (x - A) & bstar"; B is a hitting set of those.
inline CompletionCounts count_completions(const Field& field, const ElementSet& a, const ElementSet& bstar,
                                          const SearchConfig& config) {
  CompletionCounts out;
  const auto members = bstar.indices();
  const std::size_t m = members.size();
  out.by_size.assign(m + 1, 0);
  std::vector<Index> position(field.q(), 0);
  for (std::size_t i = 0; i < m; ++i) position[members[i]] = static_cast<Index>(i);

  std::vector<ElementSet> constraints;
  bool unsatisfiable = false;
  const auto as = a.indices();
  field.residue_set().for_each([&](Index x) {
    ElementSet s(static_cast<Index>(m));
    for (Index av : as) {
      const Index b = field.sub_index(x, av);
      if (bstar.contains(b)) s.insert(position[b]);
    }
    if (s.empty()) unsatisfiable = true;
    constraints.push_back(std::move(s));
  });
  if (unsatisfiable) return out;

  const std::size_t brute_limit = std::min<std::size_t>(config.brute_force_limit, 30);
  if (m <= brute_limit) {
    std::vector<std::uint32_t> masks;
    for (const auto& s : constraints) masks.push_back(static_cast<std::uint32_t>(s.words()[0]));
    const std::uint64_t total = std::uint64_t{1} << m;
    for (std::uint64_t subset = 0; subset < total; ++subset) {
      const auto bits = static_cast<std::uint32_t>(subset);
      bool hits_all = true;
      for (std::uint32_t mask : masks) {
        if ((mask & bits) == 0) {
          hits_all = false;
          break;
        }
      }
      if (hits_all) ++out.by_size[static_cast<std::size_t>(std::popcount(bits))];
    }
    return out;
  }

  // Keep only inclusion-minimal constraints; hitting those hits the rest.
  std::sort(constraints.begin(), constraints.end(),
            [](const ElementSet& x, const ElementSet& y) { return x.count() < y.count(); });
  std::vector<ElementSet> minimal;
  for (const auto& s : constraints) {
    const bool redundant =
        std::any_of(minimal.begin(), minimal.end(), [&](const ElementSet& t) { return t.is_subset_of(s); });
    if (!redundant) minimal.push_back(s);
  }
  if (minimal.size() > config.inclusion_exclusion_limit || m > 100) {
    out.limit_exceeded = true;
    return out;
  }
  // sum over T of (-1)^{|T|} C(m - |union T|, k)
  const auto binom = binomial_rows(m);
  std::vector<__int128> acc(m + 1, 0);
  const std::size_t r = minimal.size();
  auto recurse = [&](auto&& self, std::size_t next, const ElementSet& covered, bool odd) -> void {
    const std::size_t free = m - covered.count();
    for (std::size_t k = 0; k <= free; ++k) acc[k] += odd ? -binom[free][k] : binom[free][k];
    for (std::size_t i = next; i < r; ++i) self(self, i + 1, covered | minimal[i], !odd);
  };
  recurse(recurse, 0, ElementSet(static_cast<Index>(m)), false);
  for (std::size_t k = 0; k <= m; ++k) {
    if (acc[k] < 0 || acc[k] > static_cast<__int128>(std::numeric_limits<std::uint64_t>::max()))
      throw Error(ErrorKind::InvariantBreach, "inclusion-exclusion produced an impossible count");
    out.by_size[k] = static_cast<std::uint64_t>(acc[k]);
  }
  return out;
}

struct UnitStats {
  std::uint64_t nodes = 0;
  std::array<std::uint64_t, prune::kCount> pruned{};
  std::vector<DecompositionCertificate> certificates;
  SizeCounts by_size;
  std::uint64_t total = 0;
  bool found = false;
  bool limit_exceeded = false;
  bool aborted = false;

  void merge(const UnitStats& other) {
    nodes += other.nodes;
    for (std::size_t i = 0; i < prune::kCount; ++i) pruned[i] += other.pruned[i];
    certificates.insert(certificates.end(), other.certificates.begin(), other.certificates.end());
    for (const auto& [key, value] : other.by_size) by_size[key] += value;
    total += other.total;
    found = found || other.found;
    limit_exceeded = limit_exceeded || other.limit_exceeded;
  }
};

class DecompositionSearcher {
 public:
  DecompositionSearcher(const Field& field, const SearchConfig& config)
      : field_(field), config_(config), masks_(field), residues_(field.residue_set()) {
    config_.use_cauchy_davenport = config.use_cauchy_davenport && field.is_prime_field();
    window_active_ = config.use_sarkozy_window && field.is_prime_field();
    window_cap_ = window_active_ ? sarkozy_size_cap(field.q()) : std::numeric_limits<std::size_t>::max();
    residue_count_ = residues_.count();
    if (config_.symmetry_reduction) residue_list_ = residues_.indices();
  }

  SearchReport run() {
    const auto start = std::chrono::steady_clock::now();
    UnitStats root;
    std::vector<Unit> units;
    const Index q = field_.q();
    for (Index a0 = 0; a0 < q; ++a0) {
      Unit top;
      top.a = ElementSet::from_indices(q, {a0});
      top.count = 1;
      top.bstar = masks_.minus(a0);
      for (Index u = a0 + 1; u < q; ++u) top.pool.push_back(u);
      explore(top, root, &units, std::numeric_limits<std::size_t>::max());
    }

    std::vector<UnitStats> results(units.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
      for (std::size_t i = next.fetch_add(1); i < units.size(); i = next.fetch_add(1)) {
        if (first_found_.load() < i) {
          results[i].aborted = true;
          continue;
        }
        explore(units[i], results[i], nullptr, i);
        if (config_.mode == SearchMode::decide && results[i].found) {
          std::size_t cur = first_found_.load();
          while (i < cur && !first_found_.compare_exchange_weak(cur, i)) {
          }
        }
      }
    };
    const unsigned jobs = std::max(1U, config_.jobs);
    if (jobs == 1) {
      worker();
    } else {
      std::vector<std::thread> pool;
      for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
      for (auto& t : pool) t.join();
    }

    UnitStats merged = root;
    for (std::size_t i = 0; i < results.size(); ++i) {
      merged.merge(results[i]);
      if (config_.mode == SearchMode::decide && results[i].found) break;
    }

    SearchReport report;
    report.q = q;
    report.config = config_;
    report.nodes_explored = merged.nodes;
    for (std::size_t i = 0; i < prune::kCount; ++i) report.pruned_by[std::string(prune::kNames[i])] = merged.pruned[i];
    report.certificates = std::move(merged.certificates);
    finalize_certificates(field_, report.certificates, false);
    report.limit_exceeded = merged.limit_exceeded;
    report.theorem_dependent = window_active_;
    if (config_.mode == SearchMode::count_all) {
      report.n_by_size = std::move(merged.by_size);
      if (!merged.limit_exceeded) report.n_q = merged.total;
    }
    report.wall_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return report;
  }

 private:
  struct Unit {
    ElementSet a;
    std::size_t count = 0;
    ElementSet bstar;
    std::vector<Index> pool;  // extension elements above max(A), not yet screened
    std::size_t last_checked = std::numeric_limits<std::size_t>::max();
  };

  bool cancelled(std::size_t unit) const {
    return config_.mode == SearchMode::decide && first_found_.load(std::memory_order_relaxed) < unit;
  }

  void explore(const Unit& node, UnitStats& st, std::vector<Unit>* split, std::size_t unit) {
    if (cancelled(unit)) {
      st.aborted = true;
      return;
    }
    ++st.nodes;
    if (node.bstar.count() < 2) {
      ++st.pruned[prune::kMinBSize];
      return;
    }
    std::vector<Index> cand;
    cand.reserve(node.pool.size());
    for (Index u : node.pool) {
      if (masks_.count_with_minus(node.bstar, u) >= 2) {
        cand.push_back(u);
      } else {
        ++st.pruned[prune::kMinBSize];
      }
    }
    if (config_.use_filter_pruning && node.count >= 2 && !apply_filter(node, cand, st)) return;

    std::size_t last_checked = node.last_checked;
    if (last_checked == std::numeric_limits<std::size_t>::max() || cand.size() * 4 <= last_checked * 3) {
      ElementSet span = node.a;
      for (Index u : cand) span.insert(u);
      if (!residues_.is_subset_of(sumset(field_, span, node.bstar))) {
        ++st.pruned[prune::kCoverage];
        return;
      }
      last_checked = cand.size();
    }
    // Vacuous while A + B* stays inside Q; kept as a consistency check.
    if (config_.use_cauchy_davenport && node.count + node.bstar.count() - 1 > residue_count_) {
      ++st.pruned[prune::kCauchyDavenport];
      return;
    }

    if (node.count >= 2 && sumset(field_, node.a, node.bstar) == residues_) {
      on_qualifying(node.a, node.count, node.bstar, st);
      if (st.found) return;
    }

    if (node.count + 1 > window_cap_) {
      st.pruned[prune::kSarkozyWindow] += cand.size();
      return;
    }
    for (std::size_t i = 0; i < cand.size(); ++i) {
      Unit child;
      child.a = node.a;
      child.a.insert(cand[i]);
      child.count = node.count + 1;
      child.bstar = node.bstar;
      masks_.intersect_minus(child.bstar, cand[i]);
      child.pool.assign(cand.begin() + static_cast<std::ptrdiff_t>(i) + 1, cand.end());
      child.last_checked = last_checked;
      if (split != nullptr) {
        split->push_back(std::move(child));
      } else {
        explore(child, st, nullptr, unit);
        if (st.found || st.aborted) return;
      }
    }
  }

  // Elements of B* that are the only way to cover some x in Q are in every valid
  // B below this node, so every further element of A must be compatible with them.
  bool apply_filter(const Unit& node, std::vector<Index>& cand, UnitStats& st) {
    for (;;) {
      ElementSet neg_span(field_.q());
      node.a.for_each([&](Index x) { neg_span.insert(field_.neg_index(x)); });
      for (Index u : cand) neg_span.insert(field_.neg_index(u));
      ElementSet forced(field_.q());
      bool uncoverable = false;
      residues_.for_each([&](Index x) {
        if (uncoverable) return;
        ElementSet support = translate(field_, neg_span, x);
        support &= node.bstar;
        const std::size_t c = support.count();
        if (c == 0) uncoverable = true;
        if (c == 1) forced |= support;
      });
      if (uncoverable) {
        ++st.pruned[prune::kCoverage];
        return false;
      }
      if (forced.empty()) return true;
      const ElementSet allowed = max_compatible_B(masks_, forced);
      const std::size_t before = cand.size();
      std::erase_if(cand, [&](Index u) { return !allowed.contains(u); });
      if (cand.size() == before) return true;
      st.pruned[prune::kFilter] += before - cand.size();
    }
  }

  bool is_canonical(const ElementSet& a) const {
    for (Index c : residue_list_)
      if (lex_less(scale_set(field_, a, c), a)) return false;
    return true;
  }

  void on_qualifying(const ElementSet& a, std::size_t a_count, const ElementSet& bstar, UnitStats& st) {
    std::vector<Index> scalars{1};
    if (config_.symmetry_reduction && config_.mode != SearchMode::decide) {
      if (!is_canonical(a)) {
        ++st.pruned[prune::kSymmetry];
        return;
      }
      // One scalar per distinct image of A; the image of B* follows.
      scalars.clear();
      std::vector<ElementSet> seen;
      for (Index c : residue_list_) {
        ElementSet img = scale_set(field_, a, c);
        if (std::find(seen.begin(), seen.end(), img) == seen.end()) {
          seen.push_back(std::move(img));
          scalars.push_back(c);
        }
      }
    }
    const ElementSet closure = max_compatible_B(masks_, bstar);
    auto emit = [&](const ElementSet& ca, const ElementSet& cb) {
      for (Index c : scalars)
        st.certificates.push_back({field_.q(), scale_set(field_, ca, c), scale_set(field_, cb, c), false});
    };
    switch (config_.mode) {
      case SearchMode::decide:
        st.certificates.push_back({field_.q(), closure, bstar, false});
        st.found = true;
        return;
      case SearchMode::enumerate_maximal:
        if (closure == a) emit(a, bstar);
        return;
      case SearchMode::count_all: {
        const auto counts = count_completions(field_, a, bstar, config_);
        if (counts.limit_exceeded) {
          st.limit_exceeded = true;
        } else {
          for (std::size_t m = 2; m < counts.by_size.size(); ++m) {
            if (counts.by_size[m] == 0) continue;
            st.by_size[{a_count, m}] += counts.by_size[m] * scalars.size();
            st.total += counts.by_size[m] * scalars.size();
          }
        }
        if (closure == a) emit(a, bstar);
        return;
      }
      case SearchMode::shkredov:
        throw Error(ErrorKind::DomainError, "shkredov mode is served by shkredov_search");
    }
  }

  const Field& field_;
  SearchConfig config_;
  ResidueMasks masks_;
  const ElementSet& residues_;
  std::size_t residue_count_ = 0;
  bool window_active_ = false;
  std::size_t window_cap_ = 0;
  std::vector<Index> residue_list_;
  std::atomic<std::size_t> first_found_{std::numeric_limits<std::size_t>::max()};
};

}  // namespace detail

/// Exhaustive search over A with B*(A) maintained incrementally.
inline SearchReport search(const Field& field, const SearchConfig& config) {
  if (field.q() < 3) throw Error(ErrorKind::DomainError, "q must be >= 3");
  if (config.mode == SearchMode::shkredov)
    throw Error(ErrorKind::DomainError, "use shkredov_search for the A = B problem");
  detail::DecompositionSearcher searcher(field, config);
  return searcher.run();
}

inline constexpr Index kNaiveMaxQ = 17;

/// Oracle: every A with #A >= 2, B*(A) by direct elementwise test, no pruning.
inline SearchReport naive_search(const Field& field, SearchMode mode = SearchMode::count_all) {
  if (field.q() > kNaiveMaxQ)
    throw Error(ErrorKind::FieldTooLargeForOracle, "naive_search supports q <= 17");
  if (mode == SearchMode::shkredov) throw Error(ErrorKind::DomainError, "naive_search does not cover shkredov");
  const auto start = std::chrono::steady_clock::now();
  const Index q = field.q();
  std::uint32_t squares = 0;
  for (Index x = 1; x < q; ++x) squares |= 1U << field.mul_index(x, x);
  std::vector<std::uint32_t> compatible(q, 0);  // bit b set iff a + b is a square
  for (Index a = 0; a < q; ++a)
    for (Index b = 0; b < q; ++b)
      if ((squares >> field.add_index(a, b)) & 1U) compatible[a] |= 1U << b;
  auto sums = [&](std::uint32_t as, std::uint32_t bs) {
    std::uint32_t out = 0;
    for (Index a = 0; a < q; ++a) {
      if (!((as >> a) & 1U)) continue;
      for (Index b = 0; b < q; ++b)
        if ((bs >> b) & 1U) out |= 1U << field.add_index(a, b);
    }
    return out;
  };
  auto closure_of = [&](std::uint32_t bs) {
    std::uint32_t out = (q == 32) ? ~0U : ((1U << q) - 1U);
    for (Index b = 0; b < q; ++b)
      if ((bs >> b) & 1U) out &= compatible[b];
    return out;
  };
  auto to_set = [&](std::uint32_t bits) {
    ElementSet s(q);
    for (Index i = 0; i < q; ++i)
      if ((bits >> i) & 1U) s.insert(i);
    return s;
  };

  SearchReport report;
  report.q = q;
  report.config.mode = mode;
  report.config.use_cauchy_davenport = false;
  report.config.use_filter_pruning = false;
  for (auto name : prune::kNames) report.pruned_by[std::string(name)] = 0;
  std::uint64_t total = 0;
  std::optional<ElementSet> first;
  std::uint32_t first_bstar = 0;
  for (std::uint32_t as = 0; as < (1U << q); ++as) {
    const int k = std::popcount(as);
    if (k < 2) continue;
    ++report.nodes_explored;
    const std::uint32_t bstar = closure_of(as);
    if (std::popcount(bstar) < 2 || sums(as, bstar) != squares) continue;
    const ElementSet a_set = to_set(as);
    const bool closed = closure_of(bstar) == as;
    switch (mode) {
      case SearchMode::decide:
        if (!first || lex_less(a_set, *first)) {
          first = a_set;
          first_bstar = bstar;
        }
        break;
      case SearchMode::enumerate_maximal:
        if (closed) report.certificates.push_back({q, a_set, to_set(bstar), false});
        break;
      case SearchMode::count_all:
        // every B inside B*(A), checked by explicit sumset
        for (std::uint32_t bs = bstar;; bs = (bs - 1) & bstar) {
          if (std::popcount(bs) >= 2 && sums(as, bs) == squares) {
            ++report.n_by_size[{static_cast<std::size_t>(k), static_cast<std::size_t>(std::popcount(bs))}];
            ++total;
          }
          if (bs == 0) break;
        }
        if (closed) report.certificates.push_back({q, a_set, to_set(bstar), false});
        break;
      case SearchMode::shkredov:
        break;
    }
  }
  if (mode == SearchMode::decide && first) {
    report.certificates.push_back({q, to_set(closure_of(first_bstar)), to_set(first_bstar), false});
  }
  if (mode == SearchMode::count_all) report.n_q = total;
  detail::finalize_certificates(field, report.certificates, false);
  report.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

/// N(k, m, q): ordered pairs with #A = k, #B = m and A + B = Q.
inline std::uint64_t count_by_size(const Field& field, std::size_t k, std::size_t m) {
  if (k < 2 || m < 2 || k > field.q() || m > field.q())
    throw Error(ErrorKind::DomainError, "need 2 <= k, m <= q");
  const auto report = naive_search(field, SearchMode::count_all);
  const auto it = report.n_by_size.find({k, m});
  return it == report.n_by_size.end() ? 0 : it->second;
}

/// Search for A with #A >= 2 and A + A = Q. Candidates stay inside
/// { u : 2u in Q } and inside Q - a for every chosen a.
inline SearchReport shkredov_search(const Field& field) {
  if (field.q() < 3) throw Error(ErrorKind::DomainError, "q must be >= 3");
  const auto start = std::chrono::steady_clock::now();
  const Index q = field.q();
  const ResidueMasks masks(field);
  const ElementSet& residues = field.residue_set();
  ElementSet doubles_ok(q);
  for (Index u = 0; u < q; ++u)
    if (residues.contains(field.add_index(u, u))) doubles_ok.insert(u);

  SearchReport report;
  report.q = q;
  report.config.mode = SearchMode::shkredov;
  report.config.use_cauchy_davenport = false;
  report.config.use_filter_pruning = false;
  std::array<std::uint64_t, prune::kCount> pruned{};
  std::vector<DecompositionCertificate> certs;

  auto explore = [&](auto&& self, const ElementSet& a, std::size_t count, const ElementSet& allowed,
                     const std::vector<Index>& pool) -> void {
    ++report.nodes_explored;
    std::vector<Index> cand;
    for (Index u : pool) {
      if (allowed.contains(u)) {
        cand.push_back(u);
      } else {
        ++pruned[prune::kMinBSize];
      }
    }
    ElementSet span = a;
    for (Index u : cand) span.insert(u);
    if (!residues.is_subset_of(sumset(field, span, span))) {
      ++pruned[prune::kCoverage];
      return;
    }
    if (count >= 2 && sumset(field, a, a) == residues) certs.push_back({q, a, a, false});
    for (std::size_t i = 0; i < cand.size(); ++i) {
      ElementSet child = a;
      child.insert(cand[i]);
      ElementSet child_allowed = allowed;
      masks.intersect_minus(child_allowed, cand[i]);
      self(self, child, count + 1, child_allowed,
           std::vector<Index>(cand.begin() + static_cast<std::ptrdiff_t>(i) + 1, cand.end()));
    }
  };
  for (Index a0 = 0; a0 < q; ++a0) {
    if (!doubles_ok.contains(a0)) {
      ++pruned[prune::kMinBSize];
      continue;
    }
    ElementSet allowed = doubles_ok;
    masks.intersect_minus(allowed, a0);
    std::vector<Index> pool;
    for (Index u = a0 + 1; u < q; ++u) pool.push_back(u);
    explore(explore, ElementSet::from_indices(q, {a0}), 1, allowed, pool);
  }
  for (std::size_t i = 0; i < prune::kCount; ++i) report.pruned_by[std::string(prune::kNames[i])] = pruned[i];
  report.certificates = std::move(certs);
  detail::finalize_certificates(field, report.certificates, true);
  report.n_q = report.certificates.size();
  report.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace qrdecomp
