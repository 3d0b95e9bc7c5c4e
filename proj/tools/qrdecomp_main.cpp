// Copyright 2026 The qrdecomp Authors
// SPDX-License-Identifier: Apache-2.0

#include <string>
#include <vector>

#include "qrdecomp/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return qrdecomp::cli_dispatch(args);
}
