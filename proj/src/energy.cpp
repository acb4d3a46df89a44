// Copyright 2026 The nlsw Authors
// SPDX-License-Identifier: Apache-2.0

#include "nlsw/energy.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <numbers>

#include "nlsw/bloch.hpp"
#include "nlsw/errors.hpp"

namespace nlsw {

namespace {
constexpr cplx I1(0.0, 1.0);
constexpr double pi = std::numbers::pi;
}  // namespace

ConservedTriple conserved(const FourierField& Q, double k, Nonlinearity sign,
                          int multiple) {
  if (multiple < 1) throw Error("conserved: domain multiple must be >= 1");
  const double n = multiple;
  double s0 = 0.0, s1 = 0.0, s2 = 0.0;
  for (int m = -Q.truncation(); m <= Q.truncation(); ++m) {
    const double q2 = std::norm(Q[m]);
    const double kappa = m / n;
    s0 += q2;
    s1 += kappa * q2;
    s2 += kappa * kappa * q2;
  }
  const FourierField mod2 = multiply_full(Q, Q.conjugated());
  double s4 = 0.0;
  for (const auto& c : mod2.coeffs()) s4 += std::norm(c);
  const double g = cubic_coefficient(sign);
  ConservedTriple t;
  t.N = pi * n * s0;
  t.M = -pi * n * s1;
  t.E = 2.0 * pi * n * (2.0 * k * k * s2 + 0.25 * g * s4);
  return t;
}

Eigen::MatrixXd assemble_H(const WaveProfile& w, int N) {
  return to_real_basis(assemble_bloch_hamiltonian(w, 0.0, N), N).real();
}

Eigen::MatrixXd reversibility_S(int N) {
  const int S = 2 * N + 1;
  Eigen::VectorXd d(2 * S);
  for (int block = 0; block < 2; ++block) {
    const double s = block == 0 ? 1.0 : -1.0;
    d(block * S) = s;
    for (int n = 1; n <= N; ++n) {
      d(block * S + 2 * n - 1) = s;
      d(block * S + 2 * n) = -s;
    }
  }
  return d.asDiagonal();
}

Eigen::VectorXd real_coordinates(const FourierField& f, int N) {
  return (real_basis(N).adjoint() * stack_field(f, N)).real();
}

FourierField field_from_real(const Eigen::VectorXd& x, int N) {
  return unstack_field(real_basis(N) * x.cast<cplx>(), N);
}

SmallEigs h_small_eigs(const WaveProfile& w, int N) {
  const Eigen::MatrixXd H = assemble_H(w, N);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(0.5 * (H + H.transpose()),
                                                    Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success)
    throw EigensolverFailure("symmetric eigensolve failed");
  std::vector<double> ev(es.eigenvalues().data(),
                         es.eigenvalues().data() + es.eigenvalues().size());
  std::stable_sort(ev.begin(), ev.end(), [](double x, double y) {
    return std::abs(x) < std::abs(y);
  });
  if (ev.size() < 5) throw ClusterAmbiguity("truncation too small");
  SmallEigs out;
  out.fifth = ev[4];
  if (std::abs(ev[4]) - std::abs(ev[3]) < 1.0)
    throw ClusterAmbiguity("fifth eigenvalue of H is within 1 of the fourth");
  out.detB2 = ev[2] * ev[3];
  std::copy(ev.begin(), ev.begin() + 4, out.eigs.begin());
  std::sort(out.eigs.begin(), out.eigs.end());
  return out;
}

double coercivity_min(const WaveProfile& w, RayleighWeight weight, int N) {
  const FourierField Q = to_Q(w).Q.resized(N);
  const FourierField dQ = derivative(Q, 1);
  const double a = w.params.a, b = w.params.b;
  const FourierField xi = a != 0.0 ? (I1 / a) * dQ : FourierField::mode(N, -1);
  const FourierField eta =
      b != 0.0 ? (1.0 / b) * (Q - I1 * dQ) : FourierField::constant(N, 1.0);

  const int dim = 2 * (2 * N + 1);
  Eigen::MatrixXd C(dim, 4);
  C.col(0) = real_coordinates(xi, N);
  C.col(1) = real_coordinates(I1 * xi, N);
  C.col(2) = real_coordinates(eta, N);
  C.col(3) = real_coordinates(I1 * eta, N);
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(C);
  const Eigen::MatrixXd Qfull = qr.householderQ();
  const Eigen::MatrixXd W = Qfull.rightCols(dim - 4);

  const Eigen::MatrixXd H = assemble_H(w, N);
  Eigen::MatrixXd HY = W.transpose() * H * W;
  HY = 0.5 * (HY + HY.transpose());
  if (weight == RayleighWeight::l2) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(HY,
                                                      Eigen::EigenvaluesOnly);
    if (es.info() != Eigen::Success)
      throw EigensolverFailure("symmetric eigensolve failed");
    return es.eigenvalues()(0);
  }
  Eigen::VectorXd g(dim);
  for (int block = 0; block < 2; ++block) {
    const int o = block * (2 * N + 1);
    g(o) = 1.0;
    for (int n = 1; n <= N; ++n) g(o + 2 * n - 1) = g(o + 2 * n) = 1.0 + n * n;
  }
  Eigen::MatrixXd G = W.transpose() * g.asDiagonal() * W;
  G = 0.5 * (G + G.transpose());
  Eigen::GeneralizedSelfAdjointEigenSolver<Eigen::MatrixXd> es(
      HY, G, Eigen::EigenvaluesOnly | Eigen::Ax_lBx);
  if (es.info() != Eigen::Success)
    throw EigensolverFailure("generalized symmetric eigensolve failed");
  return es.eigenvalues()(0);
}

namespace {

struct ChartPoint {
  double omega, c, N, M;
  FourierField Q;  // lambda * Q_{a',b'}
};

ChartPoint chart_point(const WaveProfile& w, double a, double b,
                       const NewtonOptions& opts) {
  const WaveProfile v =
      solve_profile({a, b, w.params.sign}, w.modes(), opts);
  const double p = w.ell + w.k, k = w.k;
  const double pv = v.ell + v.k, kv = v.k;
  const double lam = k / kv;
  const CoMovingProfile cm = to_Q(v);
  const ConservedTriple t = conserved(cm.Q, kv, w.params.sign);
  ChartPoint out;
  out.omega = lam * lam * (1.0 - pv * pv) - (1.0 - p * p);
  out.c = 4.0 * lam * lam * kv * pv - 4.0 * k * p;
  out.N = lam * lam * t.N;
  out.M = lam * lam * t.M;
  out.Q = lam * cm.Q;
  return out;
}

}  // namespace

ChartDerivatives chart_derivatives(const WaveProfile& w, double h,
                                   const NewtonOptions& opts) {
  if (w.params.a == 0.0 || w.params.b == 0.0)
    throw Error("chart derivatives require ab != 0");
  const double a = w.params.a, b = w.params.b;
  const ChartPoint ap = chart_point(w, a + h, b, opts);
  const ChartPoint am = chart_point(w, a - h, b, opts);
  const ChartPoint bp = chart_point(w, a, b + h, opts);
  const ChartPoint bm = chart_point(w, a, b - h, opts);
  const double s = 1.0 / (2.0 * h);
  ChartDerivatives d;
  d.Mcal << (ap.omega - am.omega) * s, (ap.c - am.c) * s,
      (bp.omega - bm.omega) * s, (bp.c - bm.c) * s;
  d.K << (ap.N - am.N) * s, (ap.M - am.M) * s, (bp.N - bm.N) * s,
      (bp.M - bm.M) * s;
  d.dQ_da = s * (ap.Q - am.Q);
  d.dQ_db = s * (bp.Q - bm.Q);
  return d;
}

DHessian d_hessian(const WaveProfile& w, double h, const NewtonOptions& opts) {
  auto eval = [&](double step) {
    const ChartDerivatives d = chart_derivatives(w, step, opts);
    return Eigen::Matrix2d(-d.Mcal.inverse() * d.K);
  };
  DHessian out;
  out.value = eval(h);
  out.richardson_delta = (out.value - eval(0.5 * h)).cwiseAbs().maxCoeff();
  return out;
}

FrequencyDerivatives frequency_derivatives(const WaveProfile& w, double h,
                                           const NewtonOptions& opts) {
  const ChartDerivatives d = chart_derivatives(w, h, opts);
  const Eigen::Matrix2d Mi = d.Mcal.inverse();
  FrequencyDerivatives out;
  out.dQ_domega = Mi(0, 0) * d.dQ_da + Mi(0, 1) * d.dQ_db;
  out.dQ_dc = Mi(1, 0) * d.dQ_da + Mi(1, 1) * d.dQ_db;
  return out;
}

HessianReport hessian_report(const WaveProfile& w, int N, double h) {
  HessianReport r;
  const SmallEigs se = h_small_eigs(w, N);
  r.small_eigs = se.eigs;
  r.detB2 = se.detB2;
  r.coercivity_min = coercivity_min(w, RayleighWeight::l2, N);
  r.coercivity_min_h1 = coercivity_min(w, RayleighWeight::h1, N);
  if (w.params.a != 0.0 && w.params.b != 0.0) {
    const DHessian dh = d_hessian(w, h);
    r.d_hessian = dh.value;
    r.d_hessian_richardson = dh.richardson_delta;
    r.has_d_hessian = true;
  }
  return r;
}

}  // namespace nlsw
