// Copyright 2026 The nlsw Authors
// SPDX-License-Identifier: Apache-2.0

#include "nlsw/checks.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "nlsw/energy.hpp"
#include "nlsw/reduced.hpp"

namespace nlsw {

namespace {
constexpr cplx I1(0.0, 1.0);

double max_coeff_diff(const FourierField& x, const FourierField& y) {
  const int N = std::max(x.truncation(), y.truncation());
  double d = 0.0;
  for (int n = -N; n <= N; ++n) d = std::max(d, std::abs(x[n] - y[n]));
  return d;
}
}  // namespace

Check make_check(std::string name, double value, double tol) {
  return {std::move(name), value, tol, value <= tol};
}

bool all_pass(const std::vector<Check>& checks) {
  return std::all_of(checks.begin(), checks.end(),
                     [](const Check& c) { return c.pass; });
}

double spectral_distance(const std::vector<cplx>& a, const std::vector<cplx>& b,
                         double radius) {
  std::vector<bool> used(b.size(), false);
  double worst = 0.0;
  for (const auto& z : a) {
    if (std::abs(z) > radius) continue;
    double best = std::numeric_limits<double>::infinity();
    size_t at = b.size();
    for (size_t i = 0; i < b.size(); ++i) {
      if (used[i]) continue;
      const double d = std::abs(z - b[i]);
      if (d < best) {
        best = d;
        at = i;
      }
    }
    if (at == b.size()) return std::numeric_limits<double>::infinity();
    used[at] = true;
    worst = std::max(worst, best);
  }
  return worst;
}

std::vector<cplx> negate_conj(const std::vector<cplx>& v) {
  std::vector<cplx> out;
  out.reserve(v.size());
  for (const auto& z : v) out.push_back(-std::conj(z));
  return out;
}

std::vector<cplx> conj_all(const std::vector<cplx>& v) {
  std::vector<cplx> out;
  out.reserve(v.size());
  for (const auto& z : v) out.push_back(std::conj(z));
  return out;
}

std::vector<Check> verify_profile(const WaveProfile& w,
                                  const NewtonOptions& opts) {
  std::vector<Check> out;
  out.push_back(make_check("residual", w.residual, opts.tol));
  double pin = std::max(std::abs(w.P[-1] - cplx(w.params.a)),
                        std::abs(w.P[1] - cplx(w.params.b)));
  out.push_back(make_check("pinned modes", pin, 0.0));
  double even = 0.0;
  for (int n = -w.P.truncation(); n <= w.P.truncation(); n += 1)
    if (n % 2 == 0) even = std::max(even, std::abs(w.P[n]));
  out.push_back(make_check("even modes vanish", even, 0.0));

  const FourierField Q = to_Q(w).Q;
  double parity = 0.0;
  for (const auto& c : Q.coeffs()) parity = std::max(parity, std::abs(c.imag()));
  out.push_back(make_check("Re Q even, Im Q odd", parity, 1e-10));

  for (Symmetry op :
       {Symmetry::negate_a, Symmetry::negate_both, Symmetry::swap_ab}) {
    const WaveProfile t = symmetry_transform(w, op, opts);
    const char* name = op == Symmetry::negate_a      ? "negate_a"
                       : op == Symmetry::negate_both ? "negate_both"
                                                     : "swap_ab";
    const FourierField pred = mapped_Q(Q, op);
    const FourierField got = to_Q(t).Q;
    out.push_back(make_check(std::string("Q symmetry ") + name,
                             max_coeff_diff(pred, got), 1e-10));
    const double ell_sign = op == Symmetry::swap_ab ? -1.0 : 1.0;
    const double tol = op == Symmetry::swap_ab ? 1e-10 : 1e-12;
    out.push_back(make_check(std::string("k, ell under ") + name,
                             std::max(std::abs(t.k - w.k),
                                      std::abs(t.ell - ell_sign * w.ell)),
                             tol));
  }
  return out;
}

std::vector<Check> verify_spectrum(const WaveProfile& w, double gamma, int N,
                                   double tol) {
  std::vector<Check> out;
  const BlochMatrix bm = assemble_bloch(w, gamma, N);
  const std::vector<cplx> s = spectrum(w, gamma, N).eigenvalues;
  out.push_back(make_check("closed under -conj",
                           spectral_distance(s, negate_conj(s)), tol));
  if (gamma < 0.5) {
    const std::vector<cplx> sm = spectrum(w, -gamma, N).eigenvalues;
    out.push_back(make_check("sigma(gamma) = conj sigma(-gamma)",
                             spectral_distance(s, conj_all(sm)), tol));
  }
  const WaveProfile na = symmetry_transform(w, Symmetry::negate_a);
  const WaveProfile nb = symmetry_transform(w, Symmetry::negate_both);
  const WaveProfile sw = symmetry_transform(w, Symmetry::swap_ab);
  out.push_back(make_check(
      "sigma(-a,b) = sigma(a,b)",
      spectral_distance(s, spectrum(na, gamma, N).eigenvalues), tol));
  out.push_back(make_check(
      "sigma(-a,-b) = sigma(a,b)",
      spectral_distance(s, spectrum(nb, gamma, N).eigenvalues), tol));
  // The swap map e^{-iz} conj(.) sends Floquet exponent gamma to -gamma.
  const double flipped = gamma == 0.5 ? gamma : -gamma;
  out.push_back(make_check(
      "sigma(b,a,-gamma) = -conj sigma(a,b,gamma)",
      spectral_distance(negate_conj(s), spectrum(sw, flipped, N).eigenvalues),
      tol));

  const Eigen::MatrixXcd H = assemble_bloch_hamiltonian(w, gamma, N);
  const Eigen::MatrixXd J = symplectic_J(N);
  out.push_back(make_check("A = J H",
                           (bm.A - J.cast<cplx>() * H).cwiseAbs().maxCoeff(),
                           1e-12));
  out.push_back(make_check("H Hermitian",
                           (H - H.adjoint()).cwiseAbs().maxCoeff(), 1e-12));
  if (gamma == 0.0) {
    const FourierField Q = to_Q(w).Q.resized(N);
    const double r1 =
        (bm.A * stack_field(derivative(Q, 1), N)).cwiseAbs().maxCoeff();
    const double r2 = (bm.A * stack_field(I1 * Q, N)).cwiseAbs().maxCoeff();
    out.push_back(make_check("kernel contains dQ/dz", r1, 1e-8));
    out.push_back(make_check("kernel contains iQ", r2, 1e-8));
  }
  return out;
}

std::vector<Check> verify_hessian(const WaveProfile& w, int N) {
  std::vector<Check> out;
  const Eigen::MatrixXd H = assemble_H(w, N);
  out.push_back(make_check("H symmetric",
                           (H - H.transpose()).cwiseAbs().maxCoeff(), 1e-12));
  const Eigen::MatrixXd S = reversibility_S(N);
  out.push_back(make_check("H commutes with S",
                           (S * H - H * S).cwiseAbs().maxCoeff(), 1e-12));
  const Eigen::MatrixXd A =
      to_real_basis(assemble_bloch(w, 0.0, N).A, N).real();
  out.push_back(make_check("A(gamma=0) = J H",
                           (A - symplectic_J(N) * H).cwiseAbs().maxCoeff(),
                           1e-12));
  const FourierField Q = to_Q(w).Q.resized(N);
  const FourierField dQ = derivative(Q, 1);
  out.push_back(make_check(
      "H dQ/dz = 0", (H * real_coordinates(dQ, N)).cwiseAbs().maxCoeff(), 1e-8));
  out.push_back(make_check(
      "H iQ = 0", (H * real_coordinates(I1 * Q, N)).cwiseAbs().maxCoeff(),
      1e-8));
  if (w.params.a != 0.0 && w.params.b != 0.0) {
    const FrequencyDerivatives fd = frequency_derivatives(w);
    const double scale = Q.max_abs();
    const double r1 = (H * real_coordinates(fd.dQ_domega.resized(N), N) -
                       real_coordinates(Q, N))
                          .cwiseAbs()
                          .maxCoeff();
    const double r2 = (H * real_coordinates(fd.dQ_dc.resized(N), N) -
                       real_coordinates(I1 * dQ, N))
                          .cwiseAbs()
                          .maxCoeff();
    out.push_back(make_check("H d_omega Q = Q (relative)", r1 / scale, 1e-4));
    out.push_back(make_check("H d_c Q = i dQ/dz (relative)", r2 / scale, 1e-4));
  }
  return out;
}

std::vector<Check> verify_reduced(const WaveProfile& w, double gamma, int N) {
  std::vector<Check> out;
  const QuarticCoeffs c = quartic_coeffs(w.params, gamma);
  const QuarticCoeffs cs =
      quartic_coeffs(transformed_params(w.params, Symmetry::swap_ab), gamma);
  out.push_back(make_check(
      "c3, c1 odd and c2, c0 even under swap",
      std::max({std::abs(c.c3 + cs.c3), std::abs(c.c1 + cs.c1),
                std::abs(c.c2 - cs.c2), std::abs(c.c0 - cs.c0)}),
      1e-12));
  const std::array<cplx, 4> q = quartet_extract(spectrum(w, gamma, N));
  const std::vector<cplx> qv(q.begin(), q.end());
  out.push_back(make_check("quartet closed under -conj",
                           spectral_distance(qv, negate_conj(qv)), 1e-8));
  if (w.params.sign == Nonlinearity::defocusing) {
    const SignTest st = sign_test(c);
    out.push_back(make_check("sign test P(0) > 0, P(X_b) < 0, P(X_a) < 0",
                             st.holds ? 0.0 : 1.0, 0.0));
  }
  return out;
}

std::vector<Check> verify_trajectory(const Trajectory& t, double n_tol) {
  std::vector<Check> out;
  double inc = 0.0;
  for (size_t i = 1; i < t.times.size(); ++i)
    if (!(t.times[i] > t.times[i - 1])) inc = 1.0;
  out.push_back(make_check("times increasing", inc, 0.0));
  double drift = 0.0;
  for (const auto& d : t.diagnostics)
    drift = std::max(drift, std::abs(d.N - t.diagnostics.front().N));
  out.push_back(make_check("charge drift", drift, n_tol));
  return out;
}

}  // namespace nlsw
