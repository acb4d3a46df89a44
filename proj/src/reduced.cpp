// Copyright 2026 The nlsw Authors
// SPDX-License-Identifier: Apache-2.0

#include "nlsw/reduced.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "nlsw/errors.hpp"

namespace nlsw {

namespace {
constexpr cplx I1(0.0, 1.0);
}

Eigen::Matrix4cd reduced_matrix_asymptotic(const WaveParams& params,
                                           double gamma) {
  const double s = params.sign == Nonlinearity::defocusing ? 1.0 : -1.0;
  const double a = params.a, b = params.b;
  Eigen::Matrix4cd M = Eigen::Matrix4cd::Zero();
  const double g2 = 4.0 * gamma * gamma;
  M(0, 0) = M(2, 2) = 4.0 * I1 * gamma;
  M(1, 1) = M(3, 3) = -4.0 * I1 * gamma;
  M(0, 2) = -2.0 * s * a * a - g2;
  M(0, 3) = -4.0 * s * a * b;
  M(1, 2) = -4.0 * s * a * b;
  M(1, 3) = -2.0 * s * b * b - g2;
  M(2, 0) = g2;
  M(3, 1) = g2;
  return M;
}

QuarticCoeffs quartic_coeffs(const WaveParams& params, double gamma) {
  const double s = params.sign == Nonlinearity::defocusing ? 1.0 : -1.0;
  const double a2 = params.a * params.a, b2 = params.b * params.b;
  const double g2 = gamma * gamma;
  QuarticCoeffs c;
  c.params = params;
  c.gamma = gamma;
  c.c3 = s * 4.0 * (b2 - a2);
  c.c2 = 32.0 - s * 88.0 * (a2 + b2) + 32.0 * g2;
  c.c1 = 0.0;
  c.c0 = 256.0 - s * 1664.0 * (a2 + b2) - 512.0 * g2 + 256.0 * g2 * g2;
  return c;
}

QuarticCoeffs quartic_from_roots(const std::array<cplx, 4>& X) {
  // prod (X - x_i) = X^4 - e1 X^3 + e2 X^2 - e3 X + e4
  const cplx e1 = X[0] + X[1] + X[2] + X[3];
  cplx e2 = 0.0, e3 = 0.0;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) {
      e2 += X[i] * X[j];
      for (int l = j + 1; l < 4; ++l) e3 += X[i] * X[j] * X[l];
    }
  const cplx e4 = X[0] * X[1] * X[2] * X[3];
  QuarticCoeffs c;
  c.c3 = -e1.real();
  c.c2 = -e2.real();
  c.c1 = e3.real();
  c.c0 = e4.real();
  return c;
}

double quartic_eval(const QuarticCoeffs& c, double X) {
  return (((X + c.c3) * X - c.c2) * X - c.c1) * X + c.c0;
}

std::string to_string(Realness r) {
  return r == Realness::all_real_X ? "all_real_X" : "complex_X";
}

QuarticRoots quartic_roots(const QuarticCoeffs& c, double im_tol) {
  Eigen::MatrixXcd C = Eigen::MatrixXcd::Zero(4, 4);
  C(1, 0) = C(2, 1) = C(3, 2) = 1.0;
  C(0, 3) = -c.c0;
  C(1, 3) = c.c1;
  C(2, 3) = c.c2;
  C(3, 3) = -c.c3;
  std::vector<cplx> ev = eigenvalues(C);
  std::sort(ev.begin(), ev.end(), [](const cplx& x, const cplx& y) {
    if (x.real() != y.real()) return x.real() < y.real();
    return x.imag() < y.imag();
  });
  QuarticRoots r;
  r.realness = Realness::all_real_X;
  for (int i = 0; i < 4; ++i) {
    r.roots[static_cast<size_t>(i)] = ev[static_cast<size_t>(i)];
    if (std::abs(ev[static_cast<size_t>(i)].imag()) > im_tol)
      r.realness = Realness::complex_X;
  }
  return r;
}

std::array<cplx, 4> quartet_extract(const BlochSpectrum& bs, double radius) {
  auto count = [&](double r) {
    return static_cast<int>(std::count_if(
        bs.eigenvalues.begin(), bs.eigenvalues.end(),
        [r](const cplx& z) { return std::abs(z) < r; }));
  };
  const int n = count(radius);
  if (n != 4) throw WrongClusterSize(n, count(1.5), count(2.5));
  std::array<cplx, 4> q{};
  size_t i = 0;
  for (const auto& z : bs.eigenvalues)
    if (std::abs(z) < radius) q[i++] = z;
  return q;
}

double matched_mismatch(const std::array<cplx, 4>& x,
                        const std::array<cplx, 4>& y) {
  std::array<int, 4> perm{0, 1, 2, 3};
  double best_sum = std::numeric_limits<double>::infinity();
  double best_max = 0.0;
  do {
    double sum = 0.0, mx = 0.0;
    for (size_t i = 0; i < 4; ++i) {
      const double d = std::abs(x[i] - y[static_cast<size_t>(perm[i])]);
      sum += d;
      mx = std::max(mx, d);
    }
    if (sum < best_sum) {
      best_sum = sum;
      best_max = mx;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best_max;
}

QuartetReport quartet_report(const WaveProfile& w, double gamma, int N) {
  QuartetReport r;
  r.gamma = gamma;
  r.coeffs = quartic_coeffs(w.params, gamma);
  const QuarticRoots roots = quartic_roots(r.coeffs);
  r.asymptotic_roots = roots.roots;
  for (size_t i = 0; i < 4; ++i)
    r.asymptotic_quartet[i] = I1 * gamma * roots.roots[i];
  r.full_quartet = quartet_extract(spectrum(w, gamma, N));
  r.max_mismatch = matched_mismatch(r.full_quartet, r.asymptotic_quartet);
  r.realness_verdict = roots.realness;
  return r;
}

SidebandGrowth sideband_growth(const WaveParams& params, double gamma_max,
                               int N, double tol) {
  if (!(gamma_max > 0.0) || gamma_max > 0.5)
    throw Error("sideband_growth: gamma_max must lie in (0, 1/2]");
  const WaveProfile w = solve_profile(params, N);
  auto growth = [&](double gamma) {
    const auto q = quartet_extract(spectrum(w, gamma, N));
    double m = 0.0;
    for (const auto& z : q) m = std::max(m, z.real());
    return m;
  };
  constexpr int points = 40;
  double best_g = gamma_max, best = -1.0;
  for (int i = 1; i <= points; ++i) {
    const double g = gamma_max * i / points;
    const double v = growth(g);
    if (v > best) {
      best = v;
      best_g = g;
    }
  }
  const double h = gamma_max / points;
  double lo = std::max(best_g - h, 1e-12), hi = std::min(best_g + h, gamma_max);
  const double phi = 0.5 * (std::sqrt(5.0) - 1.0);
  double x1 = hi - phi * (hi - lo), x2 = lo + phi * (hi - lo);
  double f1 = growth(x1), f2 = growth(x2);
  while (hi - lo > 1e-6 * gamma_max) {
    if (f1 >= f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - phi * (hi - lo);
      f1 = growth(x1);
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + phi * (hi - lo);
      f2 = growth(x2);
    }
  }
  const double g = 0.5 * (lo + hi);
  const double v = growth(g);
  SidebandGrowth out{g, v};
  if (best > v) out = {best_g, best};
  if (!(out.growth > tol))
    throw NoGrowthFound("no side-band growth above tolerance");
  return out;
}

SignTest sign_test(const QuarticCoeffs& c) {
  const double a = c.params.a, b = c.params.b;
  SignTest t;
  t.P0 = quartic_eval(c, 0.0);
  t.P_Xb = quartic_eval(c, 4.0 - 7.0 * b * b);
  t.P_Xa = quartic_eval(c, -4.0 + 7.0 * a * a);
  t.holds = t.P0 > 0.0 && t.P_Xb < 0.0 && t.P_Xa < 0.0;
  return t;
}

}  // namespace nlsw
