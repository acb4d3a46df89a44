// Copyright 2026 The nlsw Authors
// SPDX-License-Identifier: Apache-2.0

#include "nlsw/bloch.hpp"

#include <lapacke.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

#include "nlsw/errors.hpp"

namespace nlsw {

namespace {

constexpr cplx I1(0.0, 1.0);

void check_gamma(double gamma) {
  if (!gamma_in_range(gamma))
    throw Error("gamma must lie in (-1/2, 1/2], got " + std::to_string(gamma));
}

Eigen::MatrixXcd assemble_from(const BlochPotentials& pot, double gamma,
                               int N) {
  const int S = 2 * N + 1;
  const double p = pot.p, k = pot.k, g = pot.g;
  Eigen::MatrixXcd A = Eigen::MatrixXcd::Zero(2 * S, 2 * S);
  for (int m = -N; m <= N; ++m) {
    const int r = m + N;
    for (int n = -N; n <= N; ++n) {
      const int c = n + N;
      const int d = m - n;
      const cplx ri = pot.RI[d];
      A(r, c) = 2.0 * g * ri;
      A(r, S + c) = g * (pot.RR[d] + 3.0 * pot.II[d]);
      A(S + r, c) = -g * (3.0 * pot.RR[d] + pot.II[d]);
      A(S + r, S + c) = -2.0 * g * ri;
    }
    const double mu = m + gamma;
    const double D = 4.0 * k * k * mu * mu + p * p - 1.0;
    const cplx adv = -4.0 * p * k * I1 * mu;
    A(r, r) += adv;
    A(S + r, S + r) += adv;
    A(r, S + r) += D;
    A(S + r, r) -= D;
  }
  return A;
}

}  // namespace

bool gamma_in_range(double gamma) { return gamma > -0.5 && gamma <= 0.5; }

BlochPotentials bloch_potentials(const WaveProfile& w, int N) {
  const CoMovingProfile cm = to_Q(w);
  const FourierField Q = cm.Q.resized(N);
  const FourierField Qc = Q.conjugated();
  const FourierField R = 0.5 * (Q + Qc);
  const FourierField Im = cplx(0.0, -0.5) * (Q - Qc);
  BlochPotentials pot;
  pot.p = cm.p;
  pot.k = cm.k;
  pot.g = cubic_coefficient(w.params.sign);
  pot.RR = multiply_full(R, R);
  pot.II = multiply_full(Im, Im);
  pot.RI = multiply_full(R, Im);
  return pot;
}

BlochMatrix assemble_bloch(const WaveProfile& w, double gamma, int N) {
  check_gamma(gamma);
  return {gamma, N, assemble_from(bloch_potentials(w, N), gamma, N)};
}

Eigen::MatrixXcd assemble_bloch_hamiltonian(const WaveProfile& w, double gamma,
                                            int N) {
  check_gamma(gamma);
  const BlochPotentials pot = bloch_potentials(w, N);
  const int S = 2 * N + 1;
  const double p = pot.p, k = pot.k, g = pot.g;
  Eigen::MatrixXcd H = Eigen::MatrixXcd::Zero(2 * S, 2 * S);
  for (int m = -N; m <= N; ++m) {
    for (int n = -N; n <= N; ++n) {
      const int d = m - n;
      H(m + N, n + N) = g * (3.0 * pot.RR[d] + pot.II[d]);
      H(m + N, S + n + N) = 2.0 * g * pot.RI[d];
      H(S + m + N, n + N) = 2.0 * g * pot.RI[d];
      H(S + m + N, S + n + N) = g * (pot.RR[d] + 3.0 * pot.II[d]);
    }
    const double mu = m + gamma;
    const double D = 4.0 * k * k * mu * mu + p * p - 1.0;
    H(m + N, m + N) += D;
    H(S + m + N, S + m + N) += D;
    H(m + N, S + m + N) += 4.0 * p * k * I1 * mu;
    H(S + m + N, m + N) -= 4.0 * p * k * I1 * mu;
  }
  return H;
}

Eigen::MatrixXd symplectic_J(int N) {
  const int S = 2 * N + 1;
  Eigen::MatrixXd J = Eigen::MatrixXd::Zero(2 * S, 2 * S);
  J.topRightCorner(S, S).setIdentity();
  J.bottomLeftCorner(S, S) = -Eigen::MatrixXd::Identity(S, S);
  return J;
}

Eigen::VectorXcd stack_field(const FourierField& f, int N) {
  const int S = 2 * N + 1;
  Eigen::VectorXcd x(2 * S);
  for (int n = -N; n <= N; ++n) {
    const cplx fn = f[n];
    const cplx fm = std::conj(f[-n]);
    x(n + N) = 0.5 * (fn + fm);
    x(S + n + N) = -0.5 * I1 * (fn - fm);
  }
  return x;
}

FourierField unstack_field(const Eigen::VectorXcd& x, int N) {
  const int S = 2 * N + 1;
  if (x.size() != 2 * S) throw Error("unstack_field: size mismatch");
  FourierField f(N);
  for (int n = -N; n <= N; ++n) f.at(n) = x(n + N) + I1 * x(S + n + N);
  return f;
}

Eigen::MatrixXcd real_basis(int N) {
  const int S = 2 * N + 1;
  const double r = 1.0 / std::sqrt(2.0);
  Eigen::MatrixXcd U = Eigen::MatrixXcd::Zero(2 * S, 2 * S);
  for (int block = 0; block < 2; ++block) {
    const int o = block * S;
    // column 0: constant; columns 2n-1, 2n: cos(nz), sin(nz)
    U(o + N, o) = 1.0;
    for (int n = 1; n <= N; ++n) {
      U(o + N + n, o + 2 * n - 1) = r;
      U(o + N - n, o + 2 * n - 1) = r;
      U(o + N + n, o + 2 * n) = -I1 * r;
      U(o + N - n, o + 2 * n) = I1 * r;
    }
  }
  return U;
}

Eigen::MatrixXcd to_real_basis(const Eigen::MatrixXcd& m, int N) {
  const Eigen::MatrixXcd U = real_basis(N);
  return U.adjoint() * m * U;
}

double unperturbed_omega(double p, double k, double gamma, int n, int branch) {
  const double mu = n + gamma;
  const double D = 4.0 * k * k * mu * mu + p * p - 1.0;
  return -4.0 * p * k * mu + (branch >= 0 ? D : -D);
}

void sort_spectrum(std::vector<cplx>& v) {
  std::sort(v.begin(), v.end(), [](const cplx& x, const cplx& y) {
    if (x.imag() != y.imag()) return x.imag() < y.imag();
    return x.real() < y.real();
  });
}

namespace {

EigenPairs run_zgeev(const Eigen::MatrixXcd& m, bool vectors) {
  if (m.rows() != m.cols()) throw Error("eigenvalues: matrix is not square");
  const lapack_int n = static_cast<lapack_int>(m.rows());
  EigenPairs out;
  if (n == 0) return out;
  if (!m.allFinite())
    throw EigensolverFailure("eigenvalues: matrix has non-finite entries");
  Eigen::MatrixXcd a = m;
  Eigen::VectorXcd w(n);
  Eigen::MatrixXcd vr;
  if (vectors) vr.resize(n, n);
  const lapack_int info = LAPACKE_zgeev(
      LAPACK_COL_MAJOR, 'N', vectors ? 'V' : 'N', n,
      reinterpret_cast<lapack_complex_double*>(a.data()), n,
      reinterpret_cast<lapack_complex_double*>(w.data()), nullptr, 1,
      vectors ? reinterpret_cast<lapack_complex_double*>(vr.data()) : nullptr,
      vectors ? n : 1);
  if (info != 0)
    throw EigensolverFailure("zgeev failed with info = " +
                             std::to_string(info));
  if (!w.allFinite()) throw EigensolverFailure("zgeev returned non-finite values");

  std::vector<int> order(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) order[static_cast<size_t>(i)] = i;
  std::sort(order.begin(), order.end(), [&](int i, int j) {
    if (w(i).imag() != w(j).imag()) return w(i).imag() < w(j).imag();
    if (w(i).real() != w(j).real()) return w(i).real() < w(j).real();
    return i < j;
  });
  out.values.resize(static_cast<size_t>(n));
  if (vectors) out.vectors.resize(n, n);
  for (int i = 0; i < n; ++i) {
    const int s = order[static_cast<size_t>(i)];
    out.values[static_cast<size_t>(i)] = w(s);
    if (vectors) out.vectors.col(i) = vr.col(s);
  }
  return out;
}

}  // namespace

std::vector<cplx> eigenvalues(const Eigen::MatrixXcd& m) {
  return run_zgeev(m, false).values;
}

EigenPairs eigenpairs(const Eigen::MatrixXcd& m) { return run_zgeev(m, true); }

std::vector<cplx> eigenvalues_deflated(const Eigen::MatrixXcd& A,
                                       const Eigen::MatrixXcd& kernel) {
  const Eigen::Index n = A.rows();
  // Modified Gram-Schmidt with a drop tolerance.
  std::vector<Eigen::VectorXcd> basis;
  double scale = 0.0;
  for (Eigen::Index j = 0; j < kernel.cols(); ++j)
    scale = std::max(scale, kernel.col(j).norm());
  for (Eigen::Index j = 0; j < kernel.cols(); ++j) {
    Eigen::VectorXcd v = kernel.col(j);
    for (const auto& b : basis) v -= b.dot(v) * b;
    const double nv = v.norm();
    if (nv > 1e-10 * scale && nv > 0.0) basis.push_back(v / nv);
  }
  const double anorm = A.cwiseAbs().maxCoeff();
  bool ok = !basis.empty();
  for (const auto& b : basis)
    if ((A * b).cwiseAbs().maxCoeff() > 1e-12 * std::max(anorm, 1.0)) ok = false;
  if (!ok) return eigenvalues(A);

  const Eigen::Index r = static_cast<Eigen::Index>(basis.size());
  Eigen::MatrixXcd V(n, r);
  for (Eigen::Index j = 0; j < r; ++j) V.col(j) = basis[static_cast<size_t>(j)];
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(V);
  const Eigen::MatrixXcd U = qr.householderQ();
  const Eigen::MatrixXcd W = U.rightCols(n - r);
  std::vector<cplx> ev = eigenvalues(W.adjoint() * A * W);
  for (Eigen::Index j = 0; j < r; ++j) ev.push_back(0.0);
  sort_spectrum(ev);
  return ev;
}

Eigen::MatrixXcd translation_phase_modes(const WaveProfile& w, int N) {
  const FourierField Q = to_Q(w).Q.resized(N);
  Eigen::MatrixXcd V(2 * (2 * N + 1), 2);
  V.col(0) = stack_field(derivative(Q, 1), N);
  V.col(1) = stack_field(I1 * Q, N);
  return V;
}

double max_re_within(const std::vector<cplx>& eigs, double radius) {
  double r = 0.0;
  for (const auto& z : eigs)
    if (std::abs(z) <= radius) r = std::max(r, std::abs(z.real()));
  return r;
}

BlochSpectrum spectrum(const WaveProfile& w, double gamma, int N,
                       double radius) {
  BlochSpectrum s;
  s.gamma = gamma;
  try {
    const BlochMatrix bm = assemble_bloch(w, gamma, N);
    s.eigenvalues = gamma == 0.0
                        ? eigenvalues_deflated(bm.A, translation_phase_modes(w, N))
                        : eigenvalues(bm.A);
  } catch (const Error& e) {
    throw SpectrumError(gamma, e.what());
  }
  s.max_re = max_re_within(s.eigenvalues, radius);
  return s;
}

std::vector<double> uniform_grid(double lo, double hi, int points) {
  if (points < 1) throw Error("grid needs at least one point");
  std::vector<double> g(static_cast<size_t>(points));
  for (int i = 0; i < points; ++i)
    g[static_cast<size_t>(i)] =
        points == 1 ? lo : lo + (hi - lo) * i / (points - 1);
  return g;
}

StabilityReport classify(const WaveProfile& w, const std::vector<double>& grid,
                         const SweepOptions& opts) {
  const int N = opts.modes;
  const BlochPotentials pot = bloch_potentials(w, N);
  const Eigen::MatrixXcd kernel = translation_phase_modes(w, N);
  std::map<double, double> values;

  auto eval = [&](double gamma) {
    auto it = values.find(gamma);
    if (it != values.end()) return it->second;
    if (gamma < 0.0 || gamma > 0.5)
      throw Error("classify: grid must lie in [0, 1/2]");
    double r;
    try {
      const Eigen::MatrixXcd A = assemble_from(pot, gamma, N);
      r = max_re_within(
          gamma == 0.0 ? eigenvalues_deflated(A, kernel) : eigenvalues(A),
          opts.radius);
    } catch (const Error& e) {
      throw SpectrumError(gamma, e.what());
    }
    values.emplace(gamma, r);
    return r;
  };

  for (double g : grid) eval(g);

  if (opts.refine && values.size() > 1) {
    const double tol = opts.stability_tol;
    const std::vector<std::pair<double, double>> coarse(values.begin(),
                                                        values.end());
    const size_t n = coarse.size();
    // Locate band edges by bisection.
    for (size_t i = 0; i + 1 < n; ++i) {
      double lo = coarse[i].first, hi = coarse[i + 1].first;
      const bool up_lo = coarse[i].second > tol;
      const bool up_hi = coarse[i + 1].second > tol;
      if (up_lo == up_hi) continue;
      if (std::max(coarse[i].second, coarse[i + 1].second) <= tol / 10.0)
        continue;
      while (hi - lo > opts.refine_step) {
        const double mid = 0.5 * (lo + hi);
        if ((eval(mid) > tol) == up_lo)
          lo = mid;
        else
          hi = mid;
      }
    }
    // Resolve each local peak by golden-section search.
    const double phi = 0.5 * (std::sqrt(5.0) - 1.0);
    for (size_t i = 0; i < n; ++i) {
      const double f = coarse[i].second;
      if (f <= tol / 10.0) continue;
      if (i > 0 && coarse[i - 1].second > f) continue;
      if (i + 1 < n && coarse[i + 1].second > f) continue;
      double lo = coarse[i > 0 ? i - 1 : i].first;
      double hi = coarse[i + 1 < n ? i + 1 : i].first;
      double x1 = hi - phi * (hi - lo), x2 = lo + phi * (hi - lo);
      double f1 = eval(x1), f2 = eval(x2);
      while (hi - lo > opts.refine_step) {
        if (f1 >= f2) {
          hi = x2;
          x2 = x1;
          f2 = f1;
          x1 = hi - phi * (hi - lo);
          f1 = eval(x1);
        } else {
          lo = x1;
          x1 = x2;
          f1 = f2;
          x2 = lo + phi * (hi - lo);
          f2 = eval(x2);
        }
      }
    }
  }

  StabilityReport rep;
  rep.params = w.params;
  for (const auto& [g, r] : values) {
    rep.gamma_grid.push_back(g);
    rep.per_gamma_max_re.push_back(r);
  }
  size_t peak = 0;
  for (size_t i = 0; i < rep.per_gamma_max_re.size(); ++i)
    if (rep.per_gamma_max_re[i] > rep.per_gamma_max_re[peak]) peak = i;
  rep.stable = rep.per_gamma_max_re.empty() ||
               rep.per_gamma_max_re[peak] <= opts.stability_tol;
  if (!rep.stable) {
    size_t lo = peak, hi = peak;
    while (lo > 0 && rep.per_gamma_max_re[lo - 1] > opts.stability_tol) --lo;
    while (hi + 1 < rep.per_gamma_max_re.size() &&
           rep.per_gamma_max_re[hi + 1] > opts.stability_tol)
      ++hi;
    rep.unstable_band = UnstableBand{rep.gamma_grid[lo], rep.gamma_grid[hi],
                                     rep.gamma_grid[peak],
                                     rep.per_gamma_max_re[peak]};
  }
  return rep;
}

GapReport gap_check(double p, double k, double gamma, int N) {
  GapReport r;
  r.gamma = gamma;
  auto om = [&](int branch, int n) {
    return unperturbed_omega(p, k, gamma, n, branch);
  };
  const double inf = std::numeric_limits<double>::infinity();

  r.four_in_unit_ball = std::abs(om(1, 0)) < 1.0 && std::abs(om(-1, 0)) < 1.0 &&
                        std::abs(om(1, 1)) < 1.0 && std::abs(om(-1, -1)) < 1.0;
  r.pair_near_plus_minus_i =
      std::abs(om(1, 0) + 1.0) < 0.5 && std::abs(om(-1, -1) - 1.0) < 0.5;

  r.rest_outside_ball4 = true;
  r.rest_outside_ball_5_2 = true;
  for (int n = -N; n <= N; ++n) {
    for (int s : {-1, 1}) {
      const double w = std::abs(om(s, n));
      const bool quartet = n == 0 || (s == 1 && n == 1) || (s == -1 && n == -1);
      if (!quartet && w < 4.0) r.rest_outside_ball4 = false;
      const bool pair = (s == 1 && n == 0) || (s == -1 && n == -1);
      if (!pair && w < 2.5) r.rest_outside_ball_5_2 = false;
    }
  }

  r.min_gap_all = r.min_gap_small = r.min_gap_half = inf;
  for (int s : {-1, 1}) {
    for (int t : {-1, 1}) {
      for (int n = -N; n <= N; ++n) {
        for (int q = -N; q <= N; ++q) {
          if (s == t && n == q) continue;
          const double gap = std::abs(om(s, n) - om(t, q));
          r.min_gap_all = std::min(r.min_gap_all, gap);
          bool small_pair = false, half_pair = false;
          if (s == 1 && t == 1) {
            small_pair = n != 0 && n != 1 && q != 0 && q != 1 && q != 1 - n;
            half_pair = n != 0 && q != 0 && q != -n;
          } else if (s == -1 && t == -1) {
            small_pair = n != -1 && n != 0 && q != -1 && q != 0 && q != -1 - n;
            half_pair = n != -1 && q != -1 && q != -2 - n;
          } else if (s == 1 && t == -1) {
            small_pair = n != 0 && n != 1 && q != -1 && q != 0;
            half_pair = n != 0 && q != -1;
          }
          if (small_pair) r.min_gap_small = std::min(r.min_gap_small, gap);
          if (half_pair) r.min_gap_half = std::min(r.min_gap_half, gap);
        }
      }
    }
  }
  return r;
}

GapReport gap_check(const WaveProfile& w, double gamma, int N) {
  return gap_check(w.ell + w.k, w.k, gamma, N);
}

}  // namespace nlsw
