// Copyright 2026 The qrdecomp Authors
// SPDX-License-Identifier: Apache-2.0

// Builds F_9, lists its squares and prints every maximal decomposition Q = A + B.
// Unlike the prime case, F_9 has them: Q = {1, 2, x, 2x} is a parallelogram.

#include <iostream>

#include "qrdecomp/qrdecomp.hpp"

int main() {
  using namespace qrdecomp;
  const Field field = build_field(3, 2);
  std::cout << "q = " << field.q() << ", Q = {" << field.residue_set().to_literal() << "}\n";

  SearchConfig config;
  config.mode = SearchMode::count_all;
  const SearchReport report = search(field, config);
  std::cout << "N(9) = " << *report.n_q << " ordered pairs\n";
  for (const auto& cert : report.certificates)
    std::cout << "  A = {" << cert.a.to_literal() << "}  B = {" << cert.b.to_literal() << "}\n";

  const SearchReport same = shkredov_search(field);
  std::cout << "sets with A + A = Q: " << same.certificates.size() << "\n";
  return 0;
}
