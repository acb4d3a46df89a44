// Copyright 2026 The nlsw Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>

#include "nlsw/fourier.hpp"

namespace nlsw {

enum class Nonlinearity { defocusing = -1, focusing = 1 };

// Coefficient g in W'' + W - g |W|^2 W = 0.
inline double cubic_coefficient(Nonlinearity s) {
  return s == Nonlinearity::defocusing ? 1.0 : -1.0;
}

std::string to_string(Nonlinearity s);
Nonlinearity parse_nonlinearity(const std::string& s);

struct WaveParams {
  double a = 0.0;
  double b = 0.0;
  Nonlinearity sign = Nonlinearity::defocusing;
};

inline constexpr double amplitude_cap = 0.25;
inline constexpr int default_modes = 64;

bool exceeds_amplitude_cap(const WaveParams& p);

// W(x) = exp(i ell x) P(k x). P holds odd modes only and is stored with
// truncation 2 * modes + 1, so that the co-moving profile Q has truncation
// `modes`.
struct WaveProfile {
  WaveParams params;
  double k = 1.0;
  double ell = 0.0;
  double p = 1.0;
  FourierField P;
  double residual = 0.0;
  int iterations = 0;

  int modes() const { return (P.truncation() - 1) / 2; }
};

struct NewtonOptions {
  double tol = 1e-12;
  int max_iter = 25;
};

// Leading-order expansion. The focusing branch carries no cubic correction.
WaveProfile expansion_profile(const WaveParams& params,
                              int modes = default_modes);

// Galerkin residual F_n of the stationary equation for every odd mode.
FourierField stationary_residual(const FourierField& P, double k, double ell,
                                 Nonlinearity sign);

// Newton iteration in the unknowns P_n (odd n != +-1), k and ell, with
// P_{-1} = a and P_{+1} = b held fixed.
WaveProfile refine_newton(const WaveProfile& seed, double tol = 1e-12,
                          int max_iter = 25);

// Closed form for a = 0 or b = 0, Newton otherwise.
WaveProfile solve_profile(const WaveParams& params, int modes = default_modes,
                          const NewtonOptions& opts = {});

struct WaveInvariants {
  double J = 0.0;
  double E = 0.0;
  double J_deviation = 0.0;
  double E_deviation = 0.0;
};

WaveInvariants invariants(const WaveProfile& w);

struct CoMovingProfile {
  double p = 1.0;
  double k = 1.0;
  FourierField Q;
};

// Q(z) = exp(-iz/2) P(z/2), so Q_n = P_{2n+1}.
CoMovingProfile to_Q(const WaveProfile& w);

struct PeriodPhase {
  double T = 0.0;
  double Psi = 0.0;
};

PeriodPhase period_and_phase(const WaveProfile& w);

enum class Symmetry { negate_a, negate_both, swap_ab };

WaveParams transformed_params(const WaveParams& p, Symmetry op);
// Re-solves the profile at the transformed parameters.
WaveProfile symmetry_transform(const WaveProfile& w, Symmetry op,
                               const NewtonOptions& opts = {});
// Co-moving profile predicted for the transformed parameters from Q alone.
FourierField mapped_Q(const FourierField& Q, Symmetry op);

}  // namespace nlsw
