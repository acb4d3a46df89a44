// Copyright 2026 The nlsw Authors
// SPDX-License-Identifier: Apache-2.0

#include <iostream>

#include "nlsw/cli.hpp"

int main(int argc, char** argv) {
  return nlsw::cli::run(argc, argv, std::cout, std::cerr);
}
