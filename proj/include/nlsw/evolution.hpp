// Copyright 2026 The nlsw Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <memory>
#include <vector>

#include "nlsw/energy.hpp"
#include "nlsw/wave.hpp"

namespace nlsw {

inline constexpr double overflow_guard = 1e6;

// Strang splitting for
//   i Q_t + 4 i p k Q_z + 4 k^2 Q_zz + (1 - p^2) Q - g |Q|^2 Q = 0
// on [0, 2 pi n]; stored mode m has wavenumber m / n.
class SplitStepper {
 public:
  SplitStepper(int truncation, int multiple, double p, double k,
               Nonlinearity sign, double dt);
  ~SplitStepper();
  SplitStepper(const SplitStepper&) = delete;
  SplitStepper& operator=(const SplitStepper&) = delete;

  // Advances Q in place by `steps` steps.
  void advance(FourierField& Q, int steps = 1);

  double dt() const { return dt_; }

 private:
  struct Plans;
  int K_;
  int n_;
  double dt_;
  double half_g_dt_;
  std::vector<cplx> linear_;
  std::unique_ptr<Plans> plans_;
};

FourierField step_strang(const FourierField& Q, double dt, double p, double k,
                         Nonlinearity sign, int multiple = 1);

// Mode m of a 2 pi-periodic field moved to mode m * n on the n-fold domain.
FourierField embed(const FourierField& Q, int multiple);

struct Trajectory {
  int multiple = 1;
  std::vector<double> times;
  std::vector<FourierField> states;
  std::vector<ConservedTriple> diagnostics;
  std::vector<double> rho;
};

struct EvolveOptions {
  int stride = 100;
  bool keep_states = false;
  double overflow = overflow_guard;
};

Trajectory evolve(const FourierField& Q0, double tmax, double dt, int multiple,
                  const WaveProfile& reference, const EvolveOptions& opts = {});

// inf over phase and shift of the H^1 distance on [0, 2 pi n].
double orbital_distance(const FourierField& u, const FourierField& v,
                        int multiple = 1);

// Least-squares slope of log rho over samples with t in [t0, t1]. Throws
// DegenerateFit if rho spans less than a decade and require_decade is set.
double growth_rate(const std::vector<double>& t, const std::vector<double>& rho,
                   double t0, double t1, bool require_decade = true);
double growth_rate(const Trajectory& traj, double t0, double t1,
                   bool require_decade = true);

struct SidebandSeed {
  FourierField field;  // on the n-fold domain, unit H^1 norm
  cplx lambda;         // Bloch eigenvalue carried by the seed
};

// Real part of the Bloch eigenvector at gamma = j / n with the largest real
// part of its eigenvalue, placed on the n-fold domain.
SidebandSeed sideband_seed(const WaveProfile& w, int multiple, int j,
                           int N = default_modes);

double norm_h1_sq(const FourierField& u, int multiple);

// Fixed smooth perturbation on the n-fold domain with unit H^1 norm.
FourierField generic_perturbation(int truncation, int multiple);

}  // namespace nlsw
