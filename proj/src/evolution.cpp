// Copyright 2026 The nlsw Authors
// SPDX-License-Identifier: Apache-2.0

#include "nlsw/evolution.hpp"

#include <fftw3.h>

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

struct SplitStepper::Plans {
  int size = 0;
  fftw_complex* buf = nullptr;
  fftw_plan to_grid = nullptr;
  fftw_plan to_modes = nullptr;

  explicit Plans(int n) : size(n) {
    buf = fftw_alloc_complex(static_cast<size_t>(n));
    if (!buf) throw Error("fftw_alloc_complex failed");
    to_grid = fftw_plan_dft_1d(n, buf, buf, FFTW_BACKWARD, FFTW_ESTIMATE);
    to_modes = fftw_plan_dft_1d(n, buf, buf, FFTW_FORWARD, FFTW_ESTIMATE);
    if (!to_grid || !to_modes) {
      release();
      throw Error("FFTW planning failed");
    }
  }
  ~Plans() { release(); }
  void release() {
    if (to_grid) fftw_destroy_plan(to_grid);
    if (to_modes) fftw_destroy_plan(to_modes);
    if (buf) fftw_free(buf);
    to_grid = to_modes = nullptr;
    buf = nullptr;
  }
};

SplitStepper::SplitStepper(int truncation, int multiple, double p, double k,
                           Nonlinearity sign, double dt)
    : K_(truncation), n_(multiple), dt_(dt) {
  if (truncation < 1 || multiple < 1 || !(dt > 0.0))
    throw Error("SplitStepper: invalid truncation, multiple or dt");
  half_g_dt_ = 0.5 * cubic_coefficient(sign) * dt;
  linear_.resize(static_cast<size_t>(2 * K_ + 1));
  for (int m = -K_; m <= K_; ++m) {
    const double kappa = double(m) / n_;
    const double symbol =
        -4.0 * p * k * kappa - 4.0 * k * k * kappa * kappa + 1.0 - p * p;
    linear_[static_cast<size_t>(m + K_)] = std::polar(1.0, dt * symbol);
  }
  plans_ = std::make_unique<Plans>(2 * K_ + 1);
}

SplitStepper::~SplitStepper() = default;

void SplitStepper::advance(FourierField& Q, int steps) {
  if (Q.truncation() != K_) throw Error("SplitStepper: truncation mismatch");
  const int G = plans_->size;
  auto* buf = reinterpret_cast<cplx*>(plans_->buf);
  auto& c = Q.coeffs();
  const double inv = 1.0 / G;

  auto load = [&] {
    for (int m = -K_; m <= K_; ++m)
      buf[(m + G) % G] = c[static_cast<size_t>(m + K_)];
  };
  auto store = [&] {
    for (int m = -K_; m <= K_; ++m)
      c[static_cast<size_t>(m + K_)] = buf[(m + G) % G] * inv;
  };
  auto nonlinear = [&](double factor) {
    for (int j = 0; j < G; ++j)
      buf[j] *= std::polar(1.0, -factor * std::norm(buf[j]));
  };

  for (int s = 0; s < steps; ++s) {
    load();
    fftw_execute(plans_->to_grid);
    nonlinear(half_g_dt_);
    fftw_execute(plans_->to_modes);
    store();
    for (size_t i = 0; i < c.size(); ++i) c[i] *= linear_[i];
    load();
    fftw_execute(plans_->to_grid);
    nonlinear(half_g_dt_);
    fftw_execute(plans_->to_modes);
    store();
  }
}

FourierField step_strang(const FourierField& Q, double dt, double p, double k,
                         Nonlinearity sign, int multiple) {
  SplitStepper st(Q.truncation(), multiple, p, k, sign, dt);
  FourierField out = Q;
  st.advance(out, 1);
  return out;
}

FourierField embed(const FourierField& Q, int multiple) {
  if (multiple < 1) throw Error("embed: multiple must be >= 1");
  FourierField out(Q.truncation() * multiple);
  for (int m = -Q.truncation(); m <= Q.truncation(); ++m)
    out.at(m * multiple) = Q[m];
  return out;
}

double norm_h1_sq(const FourierField& u, int multiple) {
  double s = 0.0;
  for (int m = -u.truncation(); m <= u.truncation(); ++m) {
    const double kappa = double(m) / multiple;
    s += (1.0 + kappa * kappa) * std::norm(u[m]);
  }
  return 2.0 * pi * multiple * s;
}

FourierField generic_perturbation(int truncation, int multiple) {
  FourierField f(truncation);
  const int n = multiple;
  f.at(0) = 0.2;
  if (n <= truncation) f.at(n) = 0.5;
  if (2 * n <= truncation) f.at(-2 * n) = cplx(0.0, 0.3);
  if (n > 1) f.at(1) = cplx(0.1, -0.1);
  return (1.0 / std::sqrt(norm_h1_sq(f, multiple))) * f;
}

double orbital_distance(const FourierField& u, const FourierField& v,
                        int multiple) {
  if (u.truncation() != v.truncation())
    throw Error("orbital_distance: truncation mismatch");
  const int K = u.truncation();
  const double n = multiple;
  std::vector<cplx> c;
  std::vector<double> kap;
  for (int m = -K; m <= K; ++m) {
    const double kappa = m / n;
    const cplx cm =
        2.0 * pi * n * (1.0 + kappa * kappa) * u[m] * std::conj(v[m]);
    if (cm != cplx(0.0)) {
      c.push_back(cm);
      kap.push_back(kappa);
    }
  }
  auto S = [&](double xi, int order) {
    cplx s = 0.0;
    for (size_t i = 0; i < c.size(); ++i) {
      cplx f = c[i] * std::polar(1.0, -kap[i] * xi);
      if (order >= 1) f *= -I1 * kap[i];
      if (order >= 2) f *= -I1 * kap[i];
      s += f;
    }
    return s;
  };
  const double period = 2.0 * pi * n;
  const int coarse = 64 * multiple;
  const double h = period / coarse;
  int best = 0;
  double best_val = -1.0;
  for (int i = 0; i < coarse; ++i) {
    const double val = std::abs(S(i * h, 0));
    if (val > best_val) {
      best_val = val;
      best = i;
    }
  }
  double lo = (best - 1) * h, hi = (best + 1) * h;
  const double phi = 0.5 * (std::sqrt(5.0) - 1.0);
  double x1 = hi - phi * (hi - lo), x2 = lo + phi * (hi - lo);
  double f1 = std::abs(S(x1, 0)), f2 = std::abs(S(x2, 0));
  while (hi - lo > 1e-7) {
    if (f1 >= f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - phi * (hi - lo);
      f1 = std::abs(S(x1, 0));
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + phi * (hi - lo);
      f2 = std::abs(S(x2, 0));
    }
  }
  double xi = 0.5 * (lo + hi);
  double val = std::abs(S(xi, 0));
  if (best_val > val) {
    xi = best * h;
    val = best_val;
  }
  // Newton polish on |S|^2.
  for (int it = 0; it < 4; ++it) {
    const cplx s0 = S(xi, 0), s1 = S(xi, 1), s2 = S(xi, 2);
    const double d1 = 2.0 * std::real(std::conj(s0) * s1);
    const double d2 = 2.0 * (std::norm(s1) + std::real(std::conj(s0) * s2));
    if (!(d2 < 0.0)) break;
    const double trial = xi - d1 / d2;
    const double tv = std::abs(S(trial, 0));
    if (!(tv >= val)) break;
    xi = trial;
    val = tv;
  }
  const cplx s = S(xi, 0);
  const cplx rot = std::abs(s) > 0.0 ? s / std::abs(s) : cplx(1.0);
  // e^{-i phi} with phi = -arg S
  FourierField diff(K);
  for (int m = -K; m <= K; ++m)
    diff.at(m) = u[m] - rot * v[m] * std::polar(1.0, m / n * xi);
  return std::sqrt(norm_h1_sq(diff, multiple));
}

Trajectory evolve(const FourierField& Q0, double tmax, double dt, int multiple,
                  const WaveProfile& reference, const EvolveOptions& opts) {
  if (!(tmax >= 0.0) || !(dt > 0.0) || opts.stride < 1)
    throw Error("evolve: invalid time parameters");
  const int K = Q0.truncation();
  const CoMovingProfile cm = to_Q(reference);
  const FourierField ref = embed(cm.Q, multiple).resized(K);
  const Nonlinearity sign = reference.params.sign;
  SplitStepper stepper(K, multiple, cm.p, cm.k, sign, dt);

  Trajectory tr;
  tr.multiple = multiple;
  FourierField Q = Q0;
  auto record = [&](double t) {
    tr.times.push_back(t);
    tr.diagnostics.push_back(conserved(Q, cm.k, sign, multiple));
    tr.rho.push_back(orbital_distance(Q, ref, multiple));
    if (opts.keep_states) tr.states.push_back(Q);
  };
  record(0.0);
  const long total = std::lround(tmax / dt);
  long done = 0;
  while (done < total) {
    const int chunk = static_cast<int>(std::min<long>(opts.stride, total - done));
    stepper.advance(Q, chunk);
    done += chunk;
    for (const auto& x : Q.coeffs())
      if (!(std::abs(x) <= opts.overflow))
        throw BlowupDetected("mode amplitude exceeded overflow guard at t = " +
                             std::to_string(done * dt));
    record(done * dt);
  }
  return tr;
}

double growth_rate(const std::vector<double>& t, const std::vector<double>& rho,
                   double t0, double t1, bool require_decade) {
  if (t.size() != rho.size()) throw Error("growth_rate: size mismatch");
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  double rmin = std::numeric_limits<double>::infinity(), rmax = 0.0;
  int n = 0;
  for (size_t i = 0; i < t.size(); ++i) {
    if (t[i] < t0 || t[i] > t1) continue;
    if (!(rho[i] > 0.0)) throw DegenerateFit("non-positive rho in window");
    const double y = std::log(rho[i]);
    sx += t[i];
    sy += y;
    sxx += t[i] * t[i];
    sxy += t[i] * y;
    rmin = std::min(rmin, rho[i]);
    rmax = std::max(rmax, rho[i]);
    ++n;
  }
  if (n < 2) throw DegenerateFit("fewer than two samples in window");
  if (require_decade && rmax < 10.0 * rmin)
    throw DegenerateFit("rho spans less than one decade on the window");
  const double den = n * sxx - sx * sx;
  if (!(den > 0.0)) throw DegenerateFit("degenerate time window");
  return (n * sxy - sx * sy) / den;
}

double growth_rate(const Trajectory& traj, double t0, double t1,
                   bool require_decade) {
  return growth_rate(traj.times, traj.rho, t0, t1, require_decade);
}

SidebandSeed sideband_seed(const WaveProfile& w, int multiple, int j, int N) {
  const double gamma = double(j) / multiple;
  const BlochMatrix bm = assemble_bloch(w, gamma, N);
  const EigenPairs ep = eigenpairs(bm.A);
  size_t pick = 0;
  double best = -std::numeric_limits<double>::infinity();
  for (size_t i = 0; i < ep.values.size(); ++i) {
    if (std::abs(ep.values[i]) > resolved_radius) continue;
    if (ep.values[i].real() > best) {
      best = ep.values[i].real();
      pick = i;
    }
  }
  const int S = 2 * N + 1;
  const int K = N * multiple;
  FourierField U(K), V(K);
  const Eigen::VectorXcd x = ep.vectors.col(static_cast<Eigen::Index>(pick));
  for (int n = -N; n <= N; ++n) {
    const int m = n * multiple + j;
    if (m < -K || m > K) continue;
    U.at(m) += 0.5 * x(n + N);
    U.at(-m) += 0.5 * std::conj(x(n + N));
    V.at(m) += 0.5 * x(S + n + N);
    V.at(-m) += 0.5 * std::conj(x(S + n + N));
  }
  FourierField f = U + I1 * V;
  const double nrm = std::sqrt(norm_h1_sq(f, multiple));
  if (!(nrm > 0.0)) throw Error("sideband_seed: zero eigenvector");
  return {(1.0 / nrm) * f, ep.values[pick]};
}

}  // namespace nlsw
