// Copyright 2026 The nlsw Authors
// SPDX-License-Identifier: Apache-2.0

#include "nlsw/errors.hpp"

namespace nlsw {

NonConvergence::NonConvergence(int iterations, double residual)
    : RegimeError("Newton iteration did not converge after " +
                  std::to_string(iterations) + " iterations (residual " +
                  std::to_string(residual) + ")"),
      iterations_(iterations),
      residual_(residual) {}

WrongClusterSize::WrongClusterSize(int count, int count_small, int count_large)
    : RegimeError("expected 4 eigenvalues in B(0;2), found " +
                  std::to_string(count) + " (radius 1.5: " +
                  std::to_string(count_small) + ", radius 2.5: " +
                  std::to_string(count_large) + ")"),
      count_(count),
      count_small_(count_small),
      count_large_(count_large) {}

SpectrumError::SpectrumError(double gamma, const std::string& what)
    : Error("gamma = " + std::to_string(gamma) + ": " + what), gamma_(gamma) {}

}  // namespace nlsw
