#pragma once

#include <utility>

#include "hde/censor.hpp"
#include "hde/estimate.hpp"
#include "hde/model.hpp"

namespace hde {

/// The asymptotic information matrix of the two-stage estimator,
///   Sigma = diag( 2 int (d_theta1 sigma / sigma)^2 1{x>tau} nu(dx),
///                   int (d_theta2 b / sigma)^2     1{x>tau} nu(dx) ),
/// evaluated at the true parameter. Off-diagonals vanish; the estimator's
/// limit law is N(0, Sigma^-1) on the (sqrt(n), sqrt(n h)) scales.
struct SigmaMatrix {
  double s11 = 0.0;
  double s22 = 0.0;

  /// Entries at or below 1e-10 are treated as numerically dead mass.
  bool nonsingular() const { return s11 > 1e-10 && s22 > 1e-10; }
  double inv11() const { return 1.0 / s11; }
  double inv22() const { return 1.0 / s22; }
};

/// Sigma by adaptive quadrature against the model's stationary density on
/// [tau, tau + 50 scale] (scale = stationary standard deviation; a
/// non-finite tau starts 50 scale units below the stationary mean).
/// Absolute tolerance 1e-10 per entry. Requires an invariant density.
SigmaMatrix sigma_quadrature(const DiffusionModel& model, const ParamPoint& theta0,
                             double tau);

/// Plug-in Sigma with nu replaced by the empirical measure of the active
/// pairs' left endpoints and theta0 by theta_hat. Divides by the total
/// interval count n, not the pair count, matching the (1/n) sum-with-
/// indicator normalization of the limits. Needs >= kMinUsablePairs pairs.
SigmaMatrix empirical_sigma(const PartialObservations& obs, const DiffusionModel& model,
                            const ParamPoint& theta_hat);

/// Standardized errors ( sqrt(n) (theta1_hat - theta1_0) sqrt(s11),
///                       sqrt(n h) (theta2_hat - theta2_0) sqrt(s22) );
/// each is asymptotically standard normal. Throws NumericError on a
/// singular sigma.
std::pair<double, double> standardize_errors(const EstimationResult& result,
                                             const ParamPoint& theta0,
                                             const SigmaMatrix& sigma, std::size_t n,
                                             double h_n);

}  // namespace hde
