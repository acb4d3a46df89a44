// Copyright 2026 The nlsw Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <cmath>
#include <numbers>

#include "nlsw/errors.hpp"
#include "nlsw/wave.hpp"

using namespace nlsw;
constexpr double pi = std::numbers::pi;

namespace {

WaveParams defoc(double a, double b) { return {a, b, Nonlinearity::defocusing}; }
WaveParams foc(double a, double b) { return {a, b, Nonlinearity::focusing}; }

}  // namespace

TEST_CASE("nonlinearity parsing") {
  CHECK(parse_nonlinearity("defocusing") == Nonlinearity::defocusing);
  CHECK(parse_nonlinearity("-1") == Nonlinearity::defocusing);
  CHECK(parse_nonlinearity("focusing") == Nonlinearity::focusing);
  CHECK(parse_nonlinearity("+1") == Nonlinearity::focusing);
  CHECK_THROWS_AS(parse_nonlinearity("cubic"), Error);
  CHECK(to_string(Nonlinearity::focusing) == "focusing");
  CHECK(exceeds_amplitude_cap(defoc(0.2, 0.2)));
  CHECK_FALSE(exceeds_amplitude_cap(defoc(0.1, 0.2)));
}

TEST_CASE("expansion profile") {
  const WaveProfile z = expansion_profile(defoc(0, 0), 8);
  CHECK(z.k == 1.0);
  CHECK(z.ell == 0.0);
  CHECK(z.P.max_abs() == 0.0);

  const WaveProfile d = expansion_profile(defoc(0.1, 0.1), 8);
  CHECK(d.k == doctest::Approx(0.985).epsilon(1e-14));
  CHECK(std::abs(d.ell) < 1e-16);
  CHECK(std::abs(d.P[-3] + 0.1 * 0.1 * 0.1 / 8) < 1e-16);

  const WaveProfile f = expansion_profile(foc(0.1, 0.2), 8);
  CHECK(f.k == doctest::Approx(1.0375).epsilon(1e-14));
  CHECK(f.ell == doctest::Approx(-0.0075).epsilon(1e-12));
  CHECK(f.P[-3] == cplx(0.0));
  CHECK(f.P[1] == cplx(0.2));
}

TEST_CASE("plane waves match closed forms") {
  for (double b : {0.1, 0.2}) {
    const WaveProfile w = solve_profile(defoc(0, b), 16);
    CHECK(std::abs(w.k - std::sqrt(1 - 1.5 * b * b)) < 1e-14);
    CHECK(std::abs(w.p - std::sqrt(1 - b * b)) < 1e-14);
    CHECK(std::abs(w.P[1] - b) == 0.0);
    CHECK(std::abs(w.P.max_abs() - b) == 0.0);
    // The closed form solves the Galerkin system itself.
    CHECK(stationary_residual(w.P, w.k, w.ell, w.params.sign).max_abs() < 1e-15);

    const WaveProfile f = solve_profile(foc(0, b), 16);
    CHECK(std::abs(f.k - std::sqrt(1 + 1.5 * b * b)) < 1e-14);
    CHECK(stationary_residual(f.P, f.k, f.ell, f.params.sign).max_abs() < 1e-15);
  }
  const WaveProfile a = solve_profile(defoc(0.2, 0), 16);
  CHECK(std::abs(a.k - std::sqrt(0.94)) < 1e-14);
  CHECK(std::abs(a.P[-1] - 0.2) == 0.0);
  CHECK(stationary_residual(a.P, a.k, a.ell, a.params.sign).max_abs() < 1e-15);
  CHECK(std::abs(solve_profile(defoc(0, 0.2)).k - 0.9695360) < 1e-7);
}

TEST_CASE("Newton profile invariants") {
  for (auto sign : {Nonlinearity::defocusing, Nonlinearity::focusing}) {
    const WaveProfile w = solve_profile({0.1, 0.2, sign}, 32);
    CHECK(w.residual <= 1e-12);
    CHECK(w.P[-1] == cplx(0.1));
    CHECK(w.P[1] == cplx(0.2));
    for (int n = -w.P.truncation(); n <= w.P.truncation(); n += 1)
      if (n % 2 == 0) CHECK(w.P[n] == cplx(0.0));
    // Independent residual evaluation on the returned coefficients.
    CHECK(stationary_residual(w.P, w.k, w.ell, sign).max_abs() < 1e-12);
    const CoMovingProfile q = to_Q(w);
    for (int n = -q.Q.truncation(); n <= q.Q.truncation(); ++n)
      CHECK(std::abs(q.Q[n].imag()) < 1e-10);
  }
}

TEST_CASE("cnoidal and cubic-coefficient values") {
  const WaveProfile c = solve_profile(defoc(0.05, 0.05), 32);
  CHECK(std::abs(c.k - (1 - 1.5 * 0.0025)) <= 5e-5);
  CHECK(std::abs(c.ell) <= 1e-12);

  const WaveProfile w = solve_profile(defoc(0.1, 0.2), 32);
  CHECK(std::abs(w.P[-3] + 2.5e-4) <= 2e-5);
}

TEST_CASE("cnoidal k = 1 - 3a^2/2 + O(a^4)") {
  double prev = 0.0;
  for (double a : {0.08, 0.04}) {
    const double d = std::abs(solve_profile(defoc(a, a), 32).k - (1 - 1.5 * a * a));
    if (prev > 0.0) CHECK(std::log2(prev / d) > 3.5);
    prev = d;
  }
}

TEST_CASE("expansion defect scales as t^4") {
  std::vector<double> lt, lk, ll;
  for (double t : {0.1, 0.05, 0.025}) {
    const WaveParams prm = defoc(t, 2 * t);
    const WaveProfile w = solve_profile(prm, 32);
    const WaveProfile e = expansion_profile(prm, 32);
    lt.push_back(std::log(t));
    lk.push_back(std::log(std::abs(w.k - e.k)));
    ll.push_back(std::log(std::abs(w.ell - e.ell)));
  }
  auto slope = [&](const std::vector<double>& y) {
    double mt = 0, my = 0;
    for (size_t i = 0; i < lt.size(); ++i) mt += lt[i], my += y[i];
    mt /= lt.size(), my /= lt.size();
    double num = 0, den = 0;
    for (size_t i = 0; i < lt.size(); ++i)
      num += (lt[i] - mt) * (y[i] - my), den += (lt[i] - mt) * (lt[i] - mt);
    return num / den;
  };
  CHECK(slope(lk) >= 3.5);
  CHECK(slope(ll) >= 3.5);
}

TEST_CASE("truncation robustness of the profile") {
  const WaveProfile a = solve_profile(defoc(0.1, 0.2), 24);
  const WaveProfile b = solve_profile(defoc(0.1, 0.2), 48);
  CHECK(std::abs(a.k - b.k) < 1e-14);
  CHECK(std::abs(a.ell - b.ell) < 1e-14);
  CHECK((a.P.resized(b.P.truncation()) - b.P).max_abs() < 1e-14);
}

TEST_CASE("invariants J and E") {
  for (double b : {0.1, 0.2}) {
    const WaveInvariants iv = invariants(solve_profile(defoc(0, b), 16));
    CHECK(std::abs(iv.J - b * b * std::sqrt(1 - b * b)) < 1e-14);
  }
  const WaveInvariants c = invariants(solve_profile(defoc(0.07, 0.07), 32));
  CHECK(std::abs(c.J) < 1e-10);

  const WaveInvariants g = invariants(solve_profile(defoc(0.1, 0.2), 32));
  CHECK(std::abs(g.J - 0.03) < 1e-3);
  CHECK(g.J_deviation < 1e-12);
  CHECK(g.E_deviation < 1e-12);
}

TEST_CASE("co-moving profile") {
  const CoMovingProfile q0 = to_Q(solve_profile(defoc(0, 0.1), 16));
  CHECK(std::abs(q0.Q[0] - 0.1) == 0.0);
  CHECK(std::abs(q0.Q.max_abs() - 0.1) == 0.0);

  const CoMovingProfile qa = to_Q(solve_profile(defoc(0.1, 0), 16));
  CHECK(std::abs(qa.Q[-1] - 0.1) == 0.0);
  CHECK(std::abs(qa.Q.max_abs() - 0.1) == 0.0);

  const WaveProfile w = solve_profile(defoc(0.1, 0.2), 32);
  const CoMovingProfile q = to_Q(w);
  CHECK(q.p == doctest::Approx(w.k + w.ell).epsilon(1e-15));
  CHECK(q.Q.truncation() == w.modes());
  CHECK(q.Q[0] == cplx(0.2));
  CHECK(q.Q[-1] == cplx(0.1));
  CHECK(std::abs(q.Q[-2] + 2.5e-4) < 2e-5);
  for (int n = -w.modes(); n <= w.modes(); ++n) CHECK(q.Q[n] == w.P[2 * n + 1]);
}

TEST_CASE("period and phase") {
  const PeriodPhase z = period_and_phase(solve_profile(defoc(0, 0), 8));
  CHECK(z.T == doctest::Approx(pi));
  CHECK(z.Psi == 0.0);
  CHECK(std::abs(period_and_phase(solve_profile(defoc(0.05, 0.05), 32)).Psi) < 1e-11);
  const WaveProfile w = solve_profile(defoc(0.1, 0.2), 32);
  const PeriodPhase pp = period_and_phase(w);
  CHECK(pp.T == doctest::Approx(pi / w.k).epsilon(1e-15));
  CHECK(pp.Psi == doctest::Approx(w.ell * pi / w.k).epsilon(1e-15));
}

TEST_CASE("parameter symmetries") {
  for (auto sign : {Nonlinearity::defocusing, Nonlinearity::focusing}) {
    const WaveProfile w = solve_profile({0.1, 0.2, sign}, 32);
    const FourierField Q = to_Q(w).Q;

    const WaveProfile nb = symmetry_transform(w, Symmetry::negate_both);
    CHECK(std::abs(nb.k - w.k) < 1e-12);
    CHECK(std::abs(nb.ell - w.ell) < 1e-12);
    CHECK((to_Q(nb).Q + Q).max_abs() < 1e-10);

    const WaveProfile na = symmetry_transform(w, Symmetry::negate_a);
    CHECK((to_Q(na).Q - Q.shifted(pi)).max_abs() < 1e-10);

    const WaveProfile sw = symmetry_transform(w, Symmetry::swap_ab);
    CHECK(std::abs(sw.k - w.k) < 1e-10);
    CHECK(std::abs(sw.ell + w.ell) < 1e-10);
    // Q_{b,a}(z) = e^{-iz} conj Q_{a,b}(z), checked pointwise.
    const FourierField Qs = to_Q(sw).Q;
    for (double z : {0.0, 0.9, 2.5, 4.0})
      CHECK(std::abs(evaluate(Qs, z) -
                     std::exp(cplx(0, -z)) * std::conj(evaluate(Q, z))) < 1e-10);
    CHECK((mapped_Q(Q, Symmetry::swap_ab) - Qs).max_abs() < 1e-10);
  }
  const WaveProfile p = solve_profile(defoc(0, 0.1), 16);
  const WaveProfile pn = symmetry_transform(p, Symmetry::negate_a);
  CHECK((pn.P - p.P).max_abs() == 0.0);
  CHECK(pn.k == p.k);
}

TEST_CASE("Newton failure modes") {
  const WaveProfile seed = expansion_profile(defoc(0.1, 0.2), 16);
  CHECK_THROWS_AS(refine_newton(seed, 1e-12, 0), NonConvergence);
  try {
    refine_newton(seed, 1e-12, 0);
  } catch (const NonConvergence& e) {
    CHECK(e.residual() > 1e-12);
  }
  CHECK_THROWS_AS(solve_profile(defoc(0.1, 0.2), 0), Error);
}
