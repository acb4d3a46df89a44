// Copyright 2026 The nlsw Authors
// SPDX-License-Identifier: Apache-2.0

#include "nlsw/fourier.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "nlsw/errors.hpp"

namespace nlsw {

FourierField::FourierField(int truncation) : n_(truncation) {
  if (truncation < 0) throw Error("FourierField: negative truncation");
  c_.assign(static_cast<size_t>(2 * truncation + 1), cplx(0.0));
}

FourierField::FourierField(int truncation, std::vector<cplx> coeffs)
    : n_(truncation), c_(std::move(coeffs)) {
  if (truncation < 0 || c_.size() != static_cast<size_t>(2 * truncation + 1))
    throw Error("FourierField: coefficient count does not match truncation");
}

FourierField FourierField::constant(int truncation, cplx c) {
  return mode(truncation, 0, c);
}

FourierField FourierField::mode(int truncation, int n, cplx c) {
  FourierField f(truncation);
  if (n >= -truncation && n <= truncation) f.at(n) = c;
  return f;
}

cplx& FourierField::at(int n) {
  if (n < -n_ || n > n_)
    throw Error("FourierField: mode " + std::to_string(n) + " out of range");
  return c_[static_cast<size_t>(n + n_)];
}

FourierField FourierField::resized(int truncation) const {
  FourierField f(truncation);
  const int m = std::min(truncation, n_);
  for (int n = -m; n <= m; ++n) f.at(n) = (*this)[n];
  return f;
}

FourierField FourierField::conjugated() const {
  FourierField f(n_);
  for (int n = -n_; n <= n_; ++n) f.at(n) = std::conj((*this)[-n]);
  return f;
}

FourierField FourierField::shifted(double s) const {
  FourierField f(n_);
  for (int n = -n_; n <= n_; ++n)
    f.at(n) = (*this)[n] * std::polar(1.0, n * s);
  return f;
}

double FourierField::max_abs() const {
  double m = 0.0;
  for (const auto& c : c_) m = std::max(m, std::abs(c));
  return m;
}

FourierField& FourierField::operator+=(const FourierField& o) {
  if (o.n_ != n_) throw Error("FourierField: truncation mismatch");
  for (size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

FourierField& FourierField::operator-=(const FourierField& o) {
  if (o.n_ != n_) throw Error("FourierField: truncation mismatch");
  for (size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

FourierField& FourierField::operator*=(cplx s) {
  for (auto& c : c_) c *= s;
  return *this;
}

FourierField operator+(FourierField a, const FourierField& b) { return a += b; }
FourierField operator-(FourierField a, const FourierField& b) { return a -= b; }
FourierField operator*(cplx s, FourierField a) { return a *= s; }
FourierField operator-(FourierField a) { return a *= -1.0; }

FourierField multiply_full(const FourierField& u, const FourierField& v) {
  const int nu = u.truncation();
  const int nv = v.truncation();
  FourierField w(nu + nv);
  auto& wc = w.coeffs();
  const auto& uc = u.coeffs();
  const auto& vc = v.coeffs();
  // index(w) = (i - nu) + (j - nv) + (nu + nv) = i + j
  for (size_t i = 0; i < uc.size(); ++i) {
    if (uc[i] == cplx(0.0)) continue;
    for (size_t j = 0; j < vc.size(); ++j) wc[i + j] += uc[i] * vc[j];
  }
  return w;
}

FourierField multiply(const FourierField& u, const FourierField& v) {
  if (u.truncation() != v.truncation())
    throw Error("multiply: truncation mismatch");
  return multiply_full(u, v).resized(u.truncation());
}

FourierField derivative(const FourierField& u, int order) {
  if (order != 1 && order != 2) throw Error("derivative: order must be 1 or 2");
  FourierField d(u.truncation());
  for (int n = -u.truncation(); n <= u.truncation(); ++n) {
    const cplx f = (order == 1) ? cplx(0.0, n) : cplx(-double(n) * n, 0.0);
    d.at(n) = f * u[n];
  }
  return d;
}

double inner_real(const FourierField& u, const FourierField& v) {
  if (u.truncation() != v.truncation())
    throw Error("inner_real: truncation mismatch");
  double s = 0.0;
  for (int n = -u.truncation(); n <= u.truncation(); ++n)
    s += std::real(u[n] * std::conj(v[n]));
  return 2.0 * std::numbers::pi * s;
}

double norm_h1_sq(const FourierField& u) {
  double s = 0.0;
  for (int n = -u.truncation(); n <= u.truncation(); ++n)
    s += (1.0 + double(n) * n) * std::norm(u[n]);
  return 2.0 * std::numbers::pi * s;
}

double norm_l2_sq(const FourierField& u) {
  double s = 0.0;
  for (const auto& c : u.coeffs()) s += std::norm(c);
  return 2.0 * std::numbers::pi * s;
}

cplx evaluate(const FourierField& u, double z) {
  cplx s = 0.0;
  for (int n = -u.truncation(); n <= u.truncation(); ++n)
    s += u[n] * std::polar(1.0, n * z);
  return s;
}

std::vector<cplx> sample(const FourierField& u, int points) {
  std::vector<cplx> out(static_cast<size_t>(points));
  for (int j = 0; j < points; ++j)
    out[static_cast<size_t>(j)] =
        evaluate(u, 2.0 * std::numbers::pi * j / points);
  return out;
}

}  // namespace nlsw
