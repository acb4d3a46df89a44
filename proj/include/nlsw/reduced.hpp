// Copyright 2026 The nlsw Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Dense>
#include <array>

#include "nlsw/bloch.hpp"

namespace nlsw {

inline constexpr double cluster_radius = 2.0;
inline constexpr double root_im_tol = 1e-6;

// Leading-order 4x4 matrix of the cluster near the origin:
// [[4 i gamma D2, M2 - 4 gamma^2 I], [4 gamma^2 I, 4 i gamma D2]].
Eigen::Matrix4cd reduced_matrix_asymptotic(const WaveParams& params,
                                           double gamma);

// P(X) = X^4 + c3 X^3 - c2 X^2 - c1 X + c0, with lambda = i gamma X.
struct QuarticCoeffs {
  double c3 = 0.0;
  double c2 = 0.0;
  double c1 = 0.0;
  double c0 = 0.0;
  double gamma = 0.0;
  WaveParams params;
};

QuarticCoeffs quartic_coeffs(const WaveParams& params, double gamma);
// Coefficients of prod (X - X_i); the imaginary parts are dropped.
QuarticCoeffs quartic_from_roots(const std::array<cplx, 4>& X);
double quartic_eval(const QuarticCoeffs& c, double X);

enum class Realness { all_real_X, complex_X };
std::string to_string(Realness r);

struct QuarticRoots {
  std::array<cplx, 4> roots{};
  Realness realness = Realness::all_real_X;
};

// Companion-matrix eigensolve, roots sorted by (Re, Im).
QuarticRoots quartic_roots(const QuarticCoeffs& c, double im_tol = root_im_tol);

// The four eigenvalues inside B(0; radius); throws WrongClusterSize.
std::array<cplx, 4> quartet_extract(const BlochSpectrum& bs,
                                    double radius = cluster_radius);

// Largest |x_i - y_pi(i)| under the permutation minimizing sum |x_i - y_pi(i)|.
double matched_mismatch(const std::array<cplx, 4>& x,
                        const std::array<cplx, 4>& y);

struct QuartetReport {
  double gamma = 0.0;
  QuarticCoeffs coeffs;
  std::array<cplx, 4> asymptotic_roots{};
  std::array<cplx, 4> full_quartet{};
  std::array<cplx, 4> asymptotic_quartet{};
  double max_mismatch = 0.0;
  Realness realness_verdict = Realness::all_real_X;
};

QuartetReport quartet_report(const WaveProfile& w, double gamma,
                             int N = default_modes);

struct SidebandGrowth {
  double gamma_star = 0.0;
  double growth = 0.0;
};

// Maximizes the quartet growth rate over (0, gamma_max].
SidebandGrowth sideband_growth(const WaveParams& params, double gamma_max,
                               int N = default_modes,
                               double tol = stability_tol);

struct SignTest {
  double P0 = 0.0;
  double P_Xb = 0.0;
  double P_Xa = 0.0;
  bool holds = false;
};

// Signs of P at 0, X_b = 4 - 7b^2 and X_a = -4 + 7a^2 (defocusing layout).
SignTest sign_test(const QuarticCoeffs& c);

}  // namespace nlsw
