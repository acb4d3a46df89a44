// Copyright 2026 The nlsw Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "nlsw/wave.hpp"

namespace nlsw::cli {

enum class Command { profile, spectrum, sweep, reduced, hessian, evolve };

struct RunConfig {
  Command command = Command::profile;
  WaveParams params;
  int modes = default_modes;
  double gamma = 0.0;
  double gamma_min = 0.0;
  double gamma_max = 0.5;
  int gamma_steps = 101;
  double dt = 1e-3;
  double tmax = 50.0;
  int periods = 1;
  double eps = 1e-3;
  int sideband = 0;
  std::string out;
  std::string format = "json";
  bool verify = false;
};

// Exit statuses.
inline constexpr int exit_ok = 0;
inline constexpr int exit_usage = 1;
inline constexpr int exit_regime = 2;
inline constexpr int exit_failure = 3;

// Throws nlsw::Error on invalid knobs.
void validate(const RunConfig& cfg);

int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err);
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace nlsw::cli
