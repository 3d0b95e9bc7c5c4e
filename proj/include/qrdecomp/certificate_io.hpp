// Copyright 2026 The qrdecomp Authors
// SPDX-License-Identifier: Apache-2.0

// JSON documents for search reports and run manifests, and the independent
// re-check of stored certificates.

#pragma once

#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"
#include "qrdecomp/decomp_search.hpp"
#include "qrdecomp/error.hpp"
#include "qrdecomp/field.hpp"
#include "qrdecomp/set_kernel.hpp"

namespace qrdecomp {

using Json = nlohmann::ordered_json;

inline Json config_to_json(const SearchConfig& config) {
  Json j;
  j["use_cauchy_davenport"] = config.use_cauchy_davenport;
  j["use_sarkozy_window"] = config.use_sarkozy_window;
  j["use_filter_pruning"] = config.use_filter_pruning;
  j["symmetry_reduction"] = config.symmetry_reduction;
  j["brute_force_limit"] = config.brute_force_limit;
  j["inclusion_exclusion_limit"] = config.inclusion_exclusion_limit;
  return j;
}

inline Json field_to_json(const Field& field) {
  Json j;
  j["q"] = field.q();
  j["p"] = field.p();
  j["n"] = field.n();
  j["modulus"] = field.spec().modulus;
  return j;
}

inline Json report_to_json(const Field& field, const SearchReport& report) {
  Json j;
  j["q"] = field.q();
  j["p"] = field.p();
  j["n"] = field.n();
  j["modulus"] = field.spec().modulus;
  j["mode"] = std::string(to_string(report.config.mode));
  j["config"] = config_to_json(report.config);
  if (report.certificates.empty()) {
    j["result"] = "none-found";
  } else {
    Json list = Json::array();
    for (const auto& c : report.certificates) list.push_back({{"A", c.a.to_literal()}, {"B", c.b.to_literal()}});
    j["result"] = std::move(list);
  }
  j["n_q"] = report.n_q ? Json(*report.n_q) : Json(nullptr);
  Json sizes = Json::array();
  for (const auto& [km, count] : report.n_by_size)
    sizes.push_back({{"k", km.first}, {"m", km.second}, {"count", count}});
  j["n_by_size"] = std::move(sizes);
  j["nodes_explored"] = report.nodes_explored;
  Json pruned = Json::object();
  for (const auto& [rule, count] : report.pruned_by) pruned[rule] = count;
  j["pruned_by"] = std::move(pruned);
  j["limit_exceeded"] = report.limit_exceeded;
  j["theorem_dependent"] = report.theorem_dependent;
  j["wall_ms"] = std::round(report.wall_ms * 1000.0) / 1000.0;
  j["tool_version"] = std::string(kToolVersion);
  return j;
}

/// Copy of a document without its timing fields, for byte comparisons.
inline Json strip_timing(Json j) {
  if (j.is_object()) {
    j.erase("wall_ms");
    j.erase("timestamp");
  }
  return j;
}

struct VerifyOutcome {
  bool verified = false;
  std::vector<std::string> problems;
};

/// Rechecks a report document from scratch: rebuilds the field, re-derives Q
/// by squaring and re-tests each listed pair.
inline VerifyOutcome verify_certificate_document(const Json& doc) {
  VerifyOutcome out;
  auto fail = [&](std::string msg) { out.problems.push_back(std::move(msg)); };
  try {
    const auto p = doc.at("p").get<std::uint32_t>();
    const auto n = doc.at("n").get<int>();
    const Field field(p, n);
    if (doc.at("q").get<std::uint64_t>() != field.q()) fail("q does not equal p^n");
    if (doc.at("modulus").get<std::vector<std::uint32_t>>() != field.spec().modulus) fail("modulus mismatch");
    const SearchMode mode = parse_search_mode(doc.at("mode").get<std::string>());
    const Json& result = doc.at("result");
    std::vector<DecompositionCertificate> certs;
    if (result.is_string()) {
      if (result.get<std::string>() != "none-found") fail("result string must be \"none-found\"");
    } else if (result.is_array() && !result.empty()) {
      for (const auto& entry : result) {
        DecompositionCertificate c;
        c.q = field.q();
        c.a = ElementSet::parse_literal(field.q(), entry.at("A").get<std::string>());
        c.b = ElementSet::parse_literal(field.q(), entry.at("B").get<std::string>());
        certs.push_back(std::move(c));
      }
    } else {
      fail("result must be \"none-found\" or a nonempty list");
    }

    for (std::size_t i = 0; i < certs.size(); ++i) {
      const auto& c = certs[i];
      const std::string tag = "certificate " + std::to_string(i);
      if (!reverify_decomposition(field, c.a, c.b)) {
        fail(tag + ": A + B is not Q");
        continue;
      }
      if (mode == SearchMode::shkredov) {
        if (c.a != c.b) fail(tag + ": A and B differ");
      } else {
        if (max_compatible_B(field, c.a) != c.b) fail(tag + ": B is not the maximal compatible set of A");
        if (max_compatible_B(field, c.b) != c.a) fail(tag + ": A is not the maximal compatible set of B");
      }
      if (i > 0 && !detail::cert_less(certs[i - 1], c)) fail(tag + ": certificates not strictly increasing");
    }
    if (mode == SearchMode::decide && certs.size() > 1) fail("decide mode lists more than one certificate");

    const Json& nq = doc.at("n_q");
    const bool limit = doc.value("limit_exceeded", false);
    if (mode == SearchMode::count_all) {
      if (nq.is_null()) {
        if (!limit) fail("count-all without n_q must carry limit_exceeded");
      } else {
        const auto count = nq.get<std::uint64_t>();
        if (certs.empty() != (count == 0)) fail("n_q disagrees with the certificate list");
        if (count < certs.size()) fail("n_q smaller than the number of certificates");
      }
    } else if (mode == SearchMode::shkredov) {
      if (nq.is_null() || nq.get<std::uint64_t>() != certs.size()) fail("n_q must count the listed sets");
    }
  } catch (const Error& e) {
    fail(e.what());
  } catch (const nlohmann::json::exception& e) {
    fail(std::string("malformed document: ") + e.what());
  }
  out.verified = out.problems.empty();
  return out;
}

}  // namespace qrdecomp
