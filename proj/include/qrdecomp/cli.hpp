// Copyright 2026 The qrdecomp Authors
// SPDX-License-Identifier: Apache-2.0

// Command-line front end. `cli_dispatch` is the whole program minus `main`, so
// tests can run subcommands in-process.
//
// Exit codes: 0 completed, 1 error (usage, I/O, failed verification),
// 2 count-all hit the counting limit.

#pragma once

#include <chrono>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qrdecomp/bounds.hpp"
#include "qrdecomp/certificate_io.hpp"
#include "qrdecomp/char_analysis.hpp"
#include "qrdecomp/decomp_search.hpp"
#include "qrdecomp/field.hpp"
#include "qrdecomp/field_cache.hpp"

namespace qrdecomp {

inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitLimit = 2;

namespace cli_detail {

struct FieldArgs {
  std::optional<std::uint64_t> q;
  std::optional<std::uint32_t> p;
  int n = 1;

  void attach(CLI::App* app) {
    app->add_option("--q", q, "field size (odd prime power)");
    app->add_option("--p", p, "characteristic (odd prime)");
    app->add_option("--n", n, "extension degree")->check(CLI::PositiveNumber);
  }

  Field build() const {
    if (q && p) throw Error(ErrorKind::DomainError, "give either --q or --p/--n, not both");
    if (q) {
      const auto [pp, nn] = split_prime_power(*q);
      return load_or_build_field(pp, nn);
    }
    if (!p) throw Error(ErrorKind::DomainError, "missing --q or --p");
    return load_or_build_field(*p, n);
  }
};

inline std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

struct Emitter {
  std::ostream& out;
  std::string path;  // empty: write to `out`
  std::vector<std::string> argv;

  void emit(const std::string& text, const Json& manifest_extra) const {
    if (path.empty()) {
      out << text;
      return;
    }
    write_file(path, text);
    Json manifest;
    manifest["tool_version"] = std::string(kToolVersion);
    manifest["command_line"] = argv;
    for (const auto& [key, value] : manifest_extra.items()) manifest[key] = value;
    manifest["outputs"] = Json::array({path});
    manifest["timestamp"] = utc_timestamp();
    write_file(path + ".manifest.json", manifest.dump(2) + "\n");
  }

  static void write_file(const std::string& file, const std::string& text) {
    std::ofstream f(file, std::ios::binary | std::ios::trunc);
    if (!f) throw Error(ErrorKind::ParseError, "cannot write " + file);
    f << text;
    if (!f) throw Error(ErrorKind::ParseError, "write failed for " + file);
  }
};

inline Json manifest_fields(const Field* field, const std::optional<std::uint64_t>& seed, const Json& config) {
  Json j;
  j["seed"] = seed ? Json(*seed) : Json(nullptr);
  j["field"] = field ? field_to_json(*field) : Json(nullptr);
  j["config"] = config;
  return j;
}

inline SizeGrid parse_grid(const std::string& text) {
  SizeGrid grid;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto x = item.find('x');
    if (x == std::string::npos) throw Error(ErrorKind::ParseError, "grid entries look like 16x4");
    try {
      grid.emplace_back(std::stoull(item.substr(0, x)), std::stoull(item.substr(x + 1)));
    } catch (const std::exception&) {
      throw Error(ErrorKind::ParseError, "bad grid entry '" + item + "'");
    }
  }
  if (grid.empty()) throw Error(ErrorKind::ParseError, "empty grid");
  return grid;
}

inline std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace cli_detail

inline int cli_dispatch(const std::vector<std::string>& args, std::ostream& out = std::cout,
                        std::ostream& err = std::cerr) {
  using namespace cli_detail;
  CLI::App app{"Quadratic-residue decomposition toolkit", "qrdecomp"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kToolVersion));

  FieldArgs field_args;
  std::string out_path;
  auto add_out = [&](CLI::App* sub) { sub->add_option("--out", out_path, "output file (default: stdout)"); };

  auto* field_cmd = app.add_subcommand("field", "print field parameters and Q");
  field_args.attach(field_cmd);
  add_out(field_cmd);

  SearchConfig config;
  std::string mode_text = "decide";
  bool no_cd = false;
  bool no_filter = false;
  auto* search_cmd = app.add_subcommand("search", "exhaustive decomposition search");
  field_args.attach(search_cmd);
  search_cmd->add_option("--mode", mode_text, "decide | enumerate-maximal | count-all");
  search_cmd->add_flag("--no-cd", no_cd, "disable the Cauchy-Davenport check");
  search_cmd->add_flag("--window", config.use_sarkozy_window, "cap #A by the Sarkozy window (prime q)");
  search_cmd->add_flag("--no-filter", no_filter, "disable forced-element filter pruning");
  search_cmd->add_flag("--symmetry", config.symmetry_reduction, "count canonical scaling representatives only");
  search_cmd->add_option("--jobs", config.jobs, "worker threads")->check(CLI::PositiveNumber);
  search_cmd->add_option("--bf-limit", config.brute_force_limit, "largest #B* counted by direct enumeration");
  search_cmd->add_option("--ie-limit", config.inclusion_exclusion_limit, "most constraints for inclusion-exclusion");
  add_out(search_cmd);

  std::string naive_mode = "count-all";
  auto* naive_cmd = app.add_subcommand("naive", "unpruned oracle search (q <= 17)");
  field_args.attach(naive_cmd);
  naive_cmd->add_option("--mode", naive_mode, "decide | enumerate-maximal | count-all");
  add_out(naive_cmd);

  std::size_t k = 0, m = 0;
  auto* count_cmd = app.add_subcommand("count", "exact N(k, m, q) by the oracle");
  field_args.attach(count_cmd);
  count_cmd->add_option("--k", k, "#A")->required();
  count_cmd->add_option("--m", m, "#B")->required();
  add_out(count_cmd);

  auto* shkredov_cmd = app.add_subcommand("shkredov", "search for A + A = Q");
  field_args.attach(shkredov_cmd);
  add_out(shkredov_cmd);

  int nu = 1;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  std::string grid_text;
  auto* charsum_cmd = app.add_subcommand("charsum", "sampled double character sums vs the two-term bound");
  field_args.attach(charsum_cmd);
  charsum_cmd->add_option("--nu", nu, "bound parameter nu >= 1");
  charsum_cmd->add_option("--samples", samples, "samples per grid entry")->required();
  charsum_cmd->add_option("--grid", grid_text, "size pairs, e.g. 16x4,32x8")->required();
  charsum_cmd->add_option("--seed", seed, "generator seed")->required();
  add_out(charsum_cmd);

  double epsilon = 0.5;
  auto* filter_cmd = app.add_subcommand("filter-stats", "sizes of U(V) for random V of size floor(q^(eps/2))");
  field_args.attach(filter_cmd);
  filter_cmd->add_option("--epsilon", epsilon, "epsilon in (0, 1]");
  filter_cmd->add_option("--samples", samples, "number of V drawn")->required();
  filter_cmd->add_option("--seed", seed, "generator seed")->required();
  add_out(filter_cmd);

  std::uint64_t window_p = 0;
  auto* window_cmd = app.add_subcommand("window", "Sarkozy size window for a prime p");
  window_cmd->add_option("--p", window_p, "odd prime")->required();
  add_out(window_cmd);

  std::uint64_t bound_q = 0;
  double bound_c = 1.0;
  auto* bound_cmd = app.add_subcommand("bound", "C(floor(c sqrt q), k) C(floor(c sqrt q), m)");
  bound_cmd->add_option("--q", bound_q, "field size")->required();
  bound_cmd->add_option("--k", k, "#A")->required();
  bound_cmd->add_option("--m", m, "#B")->required();
  bound_cmd->add_option("--c", bound_c, "constant c > 0");
  add_out(bound_cmd);

  std::string certificate_path;
  auto* verify_cmd = app.add_subcommand("verify", "recheck a stored search document");
  verify_cmd->add_option("--certificate", certificate_path, "JSON document written by search/naive/shkredov")
      ->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitError;
  }

  std::vector<std::string> argv{"qrdecomp"};
  argv.insert(argv.end(), args.begin(), args.end());
  const Emitter emitter{out, out_path, argv};

  try {
    if (*field_cmd) {
      const Field field = field_args.build();
      Json j = field_to_json(field);
      j["generator"] = field.tables().generator;
      j["residue_count"] = field.residue_set().count();
      j["residues"] = field.residue_set().to_literal();
      emitter.emit(dump(j), manifest_fields(&field, std::nullopt, nullptr));
      return kExitOk;
    }
    if (*search_cmd) {
      const Field field = field_args.build();
      config.mode = parse_search_mode(mode_text);
      config.use_cauchy_davenport = !no_cd;
      config.use_filter_pruning = !no_filter;
      const SearchReport report = search(field, config);
      emitter.emit(dump(report_to_json(field, report)), manifest_fields(&field, std::nullopt, config_to_json(report.config)));
      return report.limit_exceeded ? kExitLimit : kExitOk;
    }
    if (*naive_cmd) {
      const Field field = field_args.build();
      const SearchReport report = naive_search(field, parse_search_mode(naive_mode));
      emitter.emit(dump(report_to_json(field, report)), manifest_fields(&field, std::nullopt, config_to_json(report.config)));
      return kExitOk;
    }
    if (*count_cmd) {
      const Field field = field_args.build();
      Json j;
      j["q"] = field.q();
      j["k"] = k;
      j["m"] = m;
      j["count"] = count_by_size(field, k, m);
      emitter.emit(dump(j), manifest_fields(&field, std::nullopt, nullptr));
      return kExitOk;
    }
    if (*shkredov_cmd) {
      const Field field = field_args.build();
      const SearchReport report = shkredov_search(field);
      emitter.emit(dump(report_to_json(field, report)), manifest_fields(&field, std::nullopt, nullptr));
      return kExitOk;
    }
    if (*charsum_cmd) {
      const Field field = field_args.build();
      const auto report = sample_charsum_report(field, nu, samples, parse_grid(grid_text), seed);
      Json cfg;
      cfg["nu"] = nu;
      cfg["samples"] = samples;
      cfg["grid"] = grid_text;
      cfg["max_ratio"] = report.max_ratio;
      emitter.emit(to_csv(report), manifest_fields(&field, seed, cfg));
      return kExitOk;
    }
    if (*filter_cmd) {
      const Field field = field_args.build();
      const auto stats = sample_filter_stats(field, epsilon, samples, seed);
      Json cfg;
      cfg["epsilon"] = epsilon;
      cfg["samples"] = samples;
      cfg["v_size"] = stats.v_size;
      cfg["max_ratio_to_sqrt_q"] = stats.max_ratio_to_sqrt_q;
      emitter.emit(to_csv(stats), manifest_fields(&field, seed, cfg));
      return kExitOk;
    }
    if (*window_cmd) {
      const auto w = sarkozy_window(window_p);
      Json j;
      j["p"] = window_p;
      j["lower"] = w.lower;
      j["upper"] = w.upper;
      emitter.emit(dump(j), manifest_fields(nullptr, std::nullopt, nullptr));
      return kExitOk;
    }
    if (*bound_cmd) {
      const auto b = nkmq_bound_report(bound_q, k, m, bound_c);
      Json j;
      j["q"] = bound_q;
      j["k"] = k;
      j["m"] = m;
      j["c"] = bound_c;
      j["value"] = b.value;
      j["scale"] = b.log10_scale ? "log10" : "linear";
      emitter.emit(dump(j), manifest_fields(nullptr, std::nullopt, nullptr));
      return kExitOk;
    }
    if (*verify_cmd) {
      std::ifstream in(certificate_path);
      if (!in) throw Error(ErrorKind::ParseError, "cannot read " + certificate_path);
      Json doc;
      VerifyOutcome outcome;
      try {
        doc = Json::parse(in);
        outcome = verify_certificate_document(doc);
      } catch (const nlohmann::json::exception& e) {
        outcome.problems.push_back(std::string("malformed JSON: ") + e.what());
      }
      out << "verified=" << (outcome.verified ? "true" : "false") << "\n";
      for (const auto& problem : outcome.problems) err << "  " << problem << "\n";
      return outcome.verified ? kExitOk : kExitError;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}

}  // namespace qrdecomp
