// Copyright 2026 The nlsw Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace nlsw {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised when the requested parameters leave the small-amplitude regime.
class RegimeError : public Error {
 public:
  using Error::Error;
};

class NonConvergence : public RegimeError {
 public:
  NonConvergence(int iterations, double residual);
  int iterations() const { return iterations_; }
  double residual() const { return residual_; }

 private:
  int iterations_;
  double residual_;
};

class WrongClusterSize : public RegimeError {
 public:
  WrongClusterSize(int count, int count_small, int count_large);
  int count() const { return count_; }
  int count_small() const { return count_small_; }
  int count_large() const { return count_large_; }

 private:
  int count_;
  int count_small_;
  int count_large_;
};

class SingularJacobian : public Error {
 public:
  using Error::Error;
};

class ClusterAmbiguity : public Error {
 public:
  using Error::Error;
};

class NoGrowthFound : public Error {
 public:
  using Error::Error;
};

class BlowupDetected : public Error {
 public:
  using Error::Error;
};

class DegenerateFit : public Error {
 public:
  using Error::Error;
};

class EigensolverFailure : public Error {
 public:
  using Error::Error;
};

// Wraps a failure that occurred while processing one Floquet parameter.
class SpectrumError : public Error {
 public:
  SpectrumError(double gamma, const std::string& what);
  double gamma() const { return gamma_; }

 private:
  double gamma_;
};

}  // namespace nlsw
