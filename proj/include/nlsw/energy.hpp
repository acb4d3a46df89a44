// Copyright 2026 The nlsw Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Dense>
#include <array>

#include "nlsw/wave.hpp"

namespace nlsw {

inline constexpr double kernel_tol = 1e-7;
inline constexpr double fd_step = 1e-3;

struct ConservedTriple {
  double N = 0.0;
  double M = 0.0;
  double E = 0.0;
};

// Charge, momentum and energy of Q on [0, 2 pi n], where the stored mode m
// has wavenumber m / n.
ConservedTriple conserved(const FourierField& Q, double k, Nonlinearity sign,
                          int multiple = 1);

// Second variation of the modified energy at gamma = 0 in the cos/sin basis
// of the stacked (Re, Im) components; real symmetric.
Eigen::MatrixXd assemble_H(const WaveProfile& w, int N = default_modes);

// Reversibility map (u, v)(z) -> (u(-z), -v(-z)) in the same basis.
Eigen::MatrixXd reversibility_S(int N);

// Real-basis coordinates of a complex field and back.
Eigen::VectorXd real_coordinates(const FourierField& f, int N);
FourierField field_from_real(const Eigen::VectorXd& x, int N);

struct SmallEigs {
  std::array<double, 4> eigs{};  // sorted ascending
  double detB2 = 0.0;
  double fifth = 0.0;            // next eigenvalue by magnitude
};

SmallEigs h_small_eigs(const WaveProfile& w, int N = default_modes);

enum class RayleighWeight { l2, h1 };

// Minimum of <Hy, y> / |y|^2 over y orthogonal to xi, i xi, eta, i eta.
double coercivity_min(const WaveProfile& w,
                      RayleighWeight weight = RayleighWeight::l2,
                      int N = default_modes);

// (omega, c) chart around a profile and its derivatives in (a', b').
struct ChartDerivatives {
  Eigen::Matrix2d Mcal;  // rows a', b'; columns omega, c
  Eigen::Matrix2d K;     // rows a', b'; columns N, M
  FourierField dQ_da;    // derivative of lambda Q_{a',b'}
  FourierField dQ_db;
};

ChartDerivatives chart_derivatives(const WaveProfile& w, double h = fd_step,
                                   const NewtonOptions& opts = {});

struct DHessian {
  Eigen::Matrix2d value;
  double richardson_delta = 0.0;  // max entry change between h and h/2
};

// -Mcal^{-1} K by central differences.
DHessian d_hessian(const WaveProfile& w, double h = fd_step,
                   const NewtonOptions& opts = {});

struct FrequencyDerivatives {
  FourierField dQ_domega;
  FourierField dQ_dc;
};

FrequencyDerivatives frequency_derivatives(const WaveProfile& w,
                                           double h = fd_step,
                                           const NewtonOptions& opts = {});

struct HessianReport {
  std::array<double, 4> small_eigs{};
  double detB2 = 0.0;
  double coercivity_min = 0.0;
  double coercivity_min_h1 = 0.0;
  Eigen::Matrix2d d_hessian = Eigen::Matrix2d::Zero();
  double d_hessian_richardson = 0.0;
  bool has_d_hessian = false;
};

HessianReport hessian_report(const WaveProfile& w, int N = default_modes,
                             double h = fd_step);

}  // namespace nlsw
