#pragma once

#include "gapkit/rational.hpp"
#include "gapkit/rotation.hpp"

namespace gapkit {

struct SpectralReport {
  int n = 0;
  int d = 0;
  double lambda_hat = 0.0;      // max |lambda_i| over non-principal spectrum
  double alpha_observed = 0.0;  // lambda_hat / d
  double tolerance = 0.0;       // absolute accuracy of lambda_hat
};

/// Second-largest eigenvalue magnitude of the multigraph adjacency matrix.
/// Dense symmetric eigensolve for n <= 4096; beyond that, matrix-free power
/// iteration on the orthogonal complement of the all-ones vector with a
/// certified residual. Requires n >= 2.
SpectralReport second_eigenvalue(const RotationGraph& h);

struct ExpanderCheck {
  bool pass = false;
  SpectralReport report;
};

/// pass iff lambda_hat <= alpha_claim * d + 1e-6 * d.
ExpanderCheck verify_expander(const RotationGraph& h,
                              const Rational& alpha_claim);

}  // namespace gapkit
