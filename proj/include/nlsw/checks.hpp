// Copyright 2026 The nlsw Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <vector>

#include "nlsw/bloch.hpp"
#include "nlsw/evolution.hpp"
#include "nlsw/wave.hpp"

namespace nlsw {

// One invariant evaluation: pass iff value <= tol.
struct Check {
  std::string name;
  double value = 0.0;
  double tol = 0.0;
  bool pass = false;
};

Check make_check(std::string name, double value, double tol);
bool all_pass(const std::vector<Check>& checks);

// Largest distance in a greedy nearest-neighbour pairing of two multisets,
// restricted to members of `a` inside B(0; radius).
double spectral_distance(const std::vector<cplx>& a, const std::vector<cplx>& b,
                         double radius = resolved_radius);

std::vector<cplx> negate_conj(const std::vector<cplx>& v);
std::vector<cplx> conj_all(const std::vector<cplx>& v);

std::vector<Check> verify_profile(const WaveProfile& w,
                                  const NewtonOptions& opts = {});
std::vector<Check> verify_spectrum(const WaveProfile& w, double gamma,
                                   int N = default_modes, double tol = 1e-8);
std::vector<Check> verify_hessian(const WaveProfile& w, int N = default_modes);
std::vector<Check> verify_reduced(const WaveProfile& w, double gamma,
                                  int N = default_modes);
std::vector<Check> verify_trajectory(const Trajectory& t, double n_tol = 1e-8);

}  // namespace nlsw
