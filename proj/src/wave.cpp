// Copyright 2026 The nlsw Authors
// SPDX-License-Identifier: Apache-2.0

#include "nlsw/wave.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <numbers>

#include "nlsw/errors.hpp"

namespace nlsw {

std::string to_string(Nonlinearity s) {
  return s == Nonlinearity::defocusing ? "defocusing" : "focusing";
}

Nonlinearity parse_nonlinearity(const std::string& s) {
  if (s == "defocusing" || s == "-1") return Nonlinearity::defocusing;
  if (s == "focusing" || s == "+1" || s == "1") return Nonlinearity::focusing;
  throw Error("unknown nonlinearity '" + s + "'");
}

bool exceeds_amplitude_cap(const WaveParams& p) {
  return std::hypot(p.a, p.b) > amplitude_cap;
}

namespace {

int profile_truncation(int modes) {
  if (modes < 1) throw Error("number of modes must be positive");
  return 2 * modes + 1;
}

double sqrt_checked(double x, const char* what) {
  if (!(x > 0.0)) throw RegimeError(std::string(what) + " is not real");
  return std::sqrt(x);
}

double l2_norm(const FourierField& f) {
  double s = 0.0;
  for (const auto& c : f.coeffs()) s += std::norm(c);
  return std::sqrt(s);
}

WaveProfile plane_wave(const WaveParams& params, int modes) {
  const double g = cubic_coefficient(params.sign);
  WaveProfile w;
  w.params = params;
  w.P = FourierField(profile_truncation(modes));
  if (params.a == 0.0 && params.b == 0.0) {
    w.k = 1.0;
    w.ell = 0.0;
  } else if (params.a == 0.0) {
    const double b2 = params.b * params.b;
    w.k = sqrt_checked(1.0 - 1.5 * g * b2, "k");
    w.ell = sqrt_checked(1.0 - g * b2, "ell + k") - w.k;
    w.P.at(1) = params.b;
  } else {
    const double a2 = params.a * params.a;
    w.k = sqrt_checked(1.0 - 1.5 * g * a2, "k");
    w.ell = w.k - sqrt_checked(1.0 - g * a2, "k - ell");
    w.P.at(-1) = params.a;
  }
  w.p = w.ell + w.k;
  w.residual = l2_norm(stationary_residual(w.P, w.k, w.ell, params.sign));
  return w;
}

}  // namespace

WaveProfile expansion_profile(const WaveParams& params, int modes) {
  const double a = params.a;
  const double b = params.b;
  WaveProfile w;
  w.params = params;
  w.P = FourierField(profile_truncation(modes));
  w.P.at(-1) = a;
  w.P.at(1) = b;
  if (params.sign == Nonlinearity::defocusing) {
    w.ell = (b * b - a * a) / 4.0;
    w.k = 1.0 - 0.75 * (a * a + b * b);
    w.P.at(-3) = -a * a * b / 8.0;
    w.P.at(3) = -a * b * b / 8.0;
  } else {
    w.ell = (a * a - b * b) / 4.0;
    w.k = 1.0 + 0.75 * (a * a + b * b);
  }
  w.p = w.ell + w.k;
  w.residual = l2_norm(stationary_residual(w.P, w.k, w.ell, params.sign));
  return w;
}

FourierField stationary_residual(const FourierField& P, double k, double ell,
                                 Nonlinearity sign) {
  const double g = cubic_coefficient(sign);
  const int N = P.truncation();
  const FourierField cubic =
      multiply_full(multiply_full(P, P.conjugated()), P);
  FourierField F(N);
  for (int n = -N; n <= N; ++n) {
    const double s = ell + n * k;
    F.at(n) = (1.0 - s * s) * P[n] - g * cubic[n];
  }
  return F;
}

WaveProfile refine_newton(const WaveProfile& seed, double tol, int max_iter) {
  const Nonlinearity sign = seed.params.sign;
  const double g = cubic_coefficient(sign);
  const int NP = seed.P.truncation();

  std::vector<int> free_modes;
  for (int n = -NP; n <= NP; ++n)
    if ((n & 1) && n != 1 && n != -1) free_modes.push_back(n);
  const int M = static_cast<int>(free_modes.size());
  const int dim = 2 * M + 2;

  WaveProfile w = seed;
  for (int n = -NP; n <= NP; ++n)
    if (!(n & 1)) w.P.at(n) = 0.0;
  w.P.at(-1) = seed.params.a;
  w.P.at(1) = seed.params.b;

  // Equation rows: (Re, Im) of F_n for each free mode, then Re F_{-1}, Re F_1.
  std::vector<int> eq_modes = free_modes;
  eq_modes.push_back(-1);
  eq_modes.push_back(1);

  Eigen::MatrixXd jac(dim, dim);
  Eigen::VectorXd rhs(dim);
  for (int iter = 0;; ++iter) {
    const FourierField F = stationary_residual(w.P, w.k, w.ell, sign);
    w.residual = l2_norm(F);
    w.iterations = iter;
    if (w.residual <= tol) break;
    if (iter >= max_iter) throw NonConvergence(iter, w.residual);

    const FourierField abs2 = multiply_full(w.P, w.P.conjugated());
    const FourierField sq = multiply_full(w.P, w.P);
    jac.setZero();
    for (size_t r = 0; r < eq_modes.size(); ++r) {
      const int n = eq_modes[r];
      const bool pinned_row = static_cast<int>(r) >= M;
      const int row = pinned_row ? 2 * M + (static_cast<int>(r) - M)
                                 : 2 * static_cast<int>(r);
      const double s = w.ell + n * w.k;
      for (int j = 0; j < M; ++j) {
        const int m = free_modes[static_cast<size_t>(j)];
        cplx L = -2.0 * g * abs2[n - m];
        if (n == m) L += 1.0 - s * s;
        const cplx K = -g * sq[n + m];
        const cplx dx = L + K;
        const cplx dy = cplx(0.0, 1.0) * (L - K);
        jac(row, 2 * j) = dx.real();
        jac(row, 2 * j + 1) = dy.real();
        if (!pinned_row) {
          jac(row + 1, 2 * j) = dx.imag();
          jac(row + 1, 2 * j + 1) = dy.imag();
        }
      }
      const cplx dk = -2.0 * n * s * w.P[n];
      const cplx dl = -2.0 * s * w.P[n];
      jac(row, 2 * M) = dk.real();
      jac(row, 2 * M + 1) = dl.real();
      rhs(row) = -F[n].real();
      if (!pinned_row) {
        jac(row + 1, 2 * M) = dk.imag();
        jac(row + 1, 2 * M + 1) = dl.imag();
        rhs(row + 1) = -F[n].imag();
      }
    }
    Eigen::PartialPivLU<Eigen::MatrixXd> lu(jac);
    if (!(lu.rcond() > 1e-14))
      throw SingularJacobian("Newton Jacobian is numerically singular");
    const Eigen::VectorXd delta = lu.solve(rhs);
    for (int j = 0; j < M; ++j)
      w.P.at(free_modes[static_cast<size_t>(j)]) +=
          cplx(delta(2 * j), delta(2 * j + 1));
    w.k += delta(2 * M);
    w.ell += delta(2 * M + 1);
    w.p = w.ell + w.k;
  }
  w.p = w.ell + w.k;
  return w;
}

WaveProfile solve_profile(const WaveParams& params, int modes,
                          const NewtonOptions& opts) {
  if (params.a == 0.0 || params.b == 0.0) return plane_wave(params, modes);
  return refine_newton(expansion_profile(params, modes), opts.tol,
                       opts.max_iter);
}

WaveInvariants invariants(const WaveProfile& w) {
  constexpr int points = 64;
  const double g = cubic_coefficient(w.params.sign);
  const FourierField dP = derivative(w.P, 1);
  WaveInvariants out;
  double jmin = 0, jmax = 0, emin = 0, emax = 0;
  for (int j = 0; j < points; ++j) {
    const double y = 2.0 * std::numbers::pi * j / points;
    const cplx P = evaluate(w.P, y);
    const cplx Wx = cplx(0.0, w.ell) * P + w.k * evaluate(dP, y);
    const double m2 = std::norm(P);
    const double J = std::imag(std::conj(P) * Wx);
    const double E = 0.5 * std::norm(Wx) + 0.5 * m2 - 0.25 * g * m2 * m2;
    if (j == 0) {
      out.J = J;
      out.E = E;
      jmin = jmax = J;
      emin = emax = E;
    }
    jmin = std::min(jmin, J);
    jmax = std::max(jmax, J);
    emin = std::min(emin, E);
    emax = std::max(emax, E);
  }
  out.J_deviation = jmax - jmin;
  out.E_deviation = emax - emin;
  return out;
}

CoMovingProfile to_Q(const WaveProfile& w) {
  const int N = w.modes();
  CoMovingProfile out;
  out.p = w.ell + w.k;
  out.k = w.k;
  out.Q = FourierField(N);
  for (int n = -N; n <= N; ++n) out.Q.at(n) = w.P[2 * n + 1];
  return out;
}

PeriodPhase period_and_phase(const WaveProfile& w) {
  if (!(w.k > 0.0)) throw Error("period_and_phase: k must be positive");
  const double T = std::numbers::pi / w.k;
  return {T, w.ell * T};
}

WaveParams transformed_params(const WaveParams& p, Symmetry op) {
  switch (op) {
    case Symmetry::negate_a:
      return {-p.a, p.b, p.sign};
    case Symmetry::negate_both:
      return {-p.a, -p.b, p.sign};
    case Symmetry::swap_ab:
      return {p.b, p.a, p.sign};
  }
  return p;
}

WaveProfile symmetry_transform(const WaveProfile& w, Symmetry op,
                               const NewtonOptions& opts) {
  return solve_profile(transformed_params(w.params, op), w.modes(), opts);
}

FourierField mapped_Q(const FourierField& Q, Symmetry op) {
  const int N = Q.truncation();
  FourierField out(N);
  for (int n = -N; n <= N; ++n) {
    switch (op) {
      case Symmetry::negate_a:
        out.at(n) = (n % 2 == 0) ? Q[n] : -Q[n];
        break;
      case Symmetry::negate_both:
        out.at(n) = -Q[n];
        break;
      case Symmetry::swap_ab:
        out.at(n) = std::conj(Q[-n - 1]);
        break;
    }
  }
  return out;
}

}  // namespace nlsw
