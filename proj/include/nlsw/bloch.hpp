// Copyright 2026 The nlsw Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Dense>
#include <optional>
#include <vector>

#include "nlsw/wave.hpp"

namespace nlsw {

inline constexpr double resolved_radius = 10.0;
inline constexpr double stability_tol = 1e-7;

// Linearization about Q on stacked (Re Q, Im Q) perturbations, each expanded
// as sum_n c_n exp(i (n + gamma) z) for |n| <= N.
struct BlochMatrix {
  double gamma = 0.0;
  int N = 0;
  Eigen::MatrixXcd A;
};

// Real and imaginary parts of Q and the three quadratic potentials, each with
// the exact (untruncated) product coefficients.
struct BlochPotentials {
  double p = 1.0;
  double k = 1.0;
  double g = 1.0;
  FourierField RR;
  FourierField II;
  FourierField RI;
};

BlochPotentials bloch_potentials(const WaveProfile& w, int N);

bool gamma_in_range(double gamma);

BlochMatrix assemble_bloch(const WaveProfile& w, double gamma,
                           int N = default_modes);
// Hermitian H with A = J H, assembled independently of assemble_bloch.
Eigen::MatrixXcd assemble_bloch_hamiltonian(const WaveProfile& w, double gamma,
                                            int N = default_modes);
// J = [[0, 1], [-1, 0]] in blocks of size 2N+1.
Eigen::MatrixXd symplectic_J(int N);

// Stacks the real and imaginary parts of f (as functions) onto modes -N..N.
Eigen::VectorXcd stack_field(const FourierField& f, int N);
// Inverse of stack_field: u + i v.
FourierField unstack_field(const Eigen::VectorXcd& x, int N);

// Unitary change from exponential modes to the cos/sin basis, block-wise.
Eigen::MatrixXcd real_basis(int N);
Eigen::MatrixXcd to_real_basis(const Eigen::MatrixXcd& m, int N);

// Spectrum of the constant-coefficient operator, omega^{branch,n}.
double unperturbed_omega(double p, double k, double gamma, int n, int branch);

// Dense nonsymmetric eigensolve (LAPACK zgeev), sorted by (Im, Re).
std::vector<cplx> eigenvalues(const Eigen::MatrixXcd& m);

// Eigenvalues of A after splitting off the span of `kernel` (columns with
// A v = 0), which is returned as exact zeros. Columns that are numerically
// zero or dependent are dropped; if the residual check fails, no deflation
// happens.
std::vector<cplx> eigenvalues_deflated(const Eigen::MatrixXcd& A,
                                       const Eigen::MatrixXcd& kernel);

// Stacked discretizations of dQ/dz and iQ.
Eigen::MatrixXcd translation_phase_modes(const WaveProfile& w, int N);

struct EigenPairs {
  std::vector<cplx> values;
  Eigen::MatrixXcd vectors;  // columns match values
};

EigenPairs eigenpairs(const Eigen::MatrixXcd& m);

void sort_spectrum(std::vector<cplx>& v);

struct BlochSpectrum {
  double gamma = 0.0;
  std::vector<cplx> eigenvalues;
  double max_re = 0.0;
};

double max_re_within(const std::vector<cplx>& eigs, double radius);

BlochSpectrum spectrum(const WaveProfile& w, double gamma,
                       int N = default_modes, double radius = resolved_radius);

struct SweepOptions {
  int modes = default_modes;
  double stability_tol = nlsw::stability_tol;
  double radius = resolved_radius;
  bool refine = true;
  double refine_step = 1e-4;
};

struct UnstableBand {
  double gamma_lo = 0.0;
  double gamma_hi = 0.0;
  double peak_gamma = 0.0;
  double peak_growth = 0.0;
};

struct StabilityReport {
  WaveParams params;
  std::vector<double> gamma_grid;
  std::vector<double> per_gamma_max_re;
  bool stable = true;
  std::optional<UnstableBand> unstable_band;
};

std::vector<double> uniform_grid(double lo, double hi, int points);

// Sweeps gamma over grid (a subset of [0, 1/2]) and refines around growth.
// Refined points are merged into gamma_grid in increasing order.
StabilityReport classify(const WaveProfile& w, const std::vector<double>& grid,
                         const SweepOptions& opts = {});

// Ball-membership and separation statements about the closed-form
// frequencies, evaluated for |n| <= N.
struct GapReport {
  double gamma = 0.0;
  // near gamma = 0
  bool four_in_unit_ball = false;
  bool rest_outside_ball4 = false;
  double min_gap_small = 0.0;
  // gamma away from 0 and 1/2
  double min_gap_all = 0.0;
  // near gamma = 1/2
  bool pair_near_plus_minus_i = false;
  bool rest_outside_ball_5_2 = false;
  double min_gap_half = 0.0;
};

GapReport gap_check(double p, double k, double gamma, int N = default_modes);
GapReport gap_check(const WaveProfile& w, double gamma, int N = default_modes);

}  // namespace nlsw
