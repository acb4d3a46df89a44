// Copyright 2026 The nlsw Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <complex>
#include <vector>

namespace nlsw {

using cplx = std::complex<double>;

// A 2*pi-periodic complex function stored as Fourier coefficients on the
// modes -N..N. Modes outside the range are zero.
class FourierField {
 public:
  FourierField() = default;
  explicit FourierField(int truncation);
  FourierField(int truncation, std::vector<cplx> coeffs);

  static FourierField constant(int truncation, cplx c);
  static FourierField mode(int truncation, int n, cplx c = 1.0);

  int truncation() const { return n_; }
  int size() const { return 2 * n_ + 1; }

  cplx operator[](int n) const {
    return (n < -n_ || n > n_) ? cplx(0.0) : c_[static_cast<size_t>(n + n_)];
  }
  cplx& at(int n);

  const std::vector<cplx>& coeffs() const { return c_; }
  std::vector<cplx>& coeffs() { return c_; }

  // Copy onto a different truncation, dropping or zero-padding modes.
  FourierField resized(int truncation) const;
  // Coefficients of conj(u(z)): c_n -> conj(c_{-n}).
  FourierField conjugated() const;
  // Coefficients of u(z + s).
  FourierField shifted(double s) const;

  double max_abs() const;

  FourierField& operator+=(const FourierField& o);
  FourierField& operator-=(const FourierField& o);
  FourierField& operator*=(cplx s);

 private:
  int n_ = 0;
  std::vector<cplx> c_;
};

FourierField operator+(FourierField a, const FourierField& b);
FourierField operator-(FourierField a, const FourierField& b);
FourierField operator*(cplx s, FourierField a);
FourierField operator-(FourierField a);

// Pointwise product. The exact product has modes up to 2N; the result keeps
// modes |n| <= N of the exact convolution and discards the rest, so no
// aliasing enters the retained modes. Throws on mismatched truncations.
FourierField multiply(const FourierField& u, const FourierField& v);
// Exact product with truncation N_u + N_v.
FourierField multiply_full(const FourierField& u, const FourierField& v);

// Coefficient n multiplied by (i n)^order, order in {1, 2}.
FourierField derivative(const FourierField& u, int order = 1);

// Re int_0^{2pi} u conj(v) dz.
double inner_real(const FourierField& u, const FourierField& v);
// 2 pi sum (1 + n^2) |u_n|^2.
double norm_h1_sq(const FourierField& u);
double norm_l2_sq(const FourierField& u);

cplx evaluate(const FourierField& u, double z);
// Values on the uniform grid z_j = 2 pi j / points.
std::vector<cplx> sample(const FourierField& u, int points);

}  // namespace nlsw
