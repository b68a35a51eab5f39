#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "hde/censor.hpp"
#include "hde/model.hpp"

namespace hde {

/// Value of a contrast sum together with the number of indicator-active
/// pairs it ran over.
struct ContrastValue {
  double value = 0.0;
  std::int64_t n_terms = 0;
};

/// Diffusion-stage contrast
///   g_n(theta1) = sum_i [ log sigma^2(X_{i-1},theta1)
///                         + (Delta_i X)^2 / (sigma^2(X_{i-1},theta1) h_n) ]
/// over the pairs with X_{i-1} > tau' and X_i > tau. Left-to-right Kahan
/// accumulation. Throws InsufficientDataError when no pair is active.
ContrastValue g_contrast(const PartialObservations& obs, const DiffusionModel& model,
                         double theta1);

/// Drift-stage contrast, with (Delta_i X - b(X_{i-1},theta2) h_n)^2 in the
/// numerator; same indicator, same accumulation, same empty-sum error.
ContrastValue l_contrast(const PartialObservations& obs, const DiffusionModel& model,
                         const ParamPoint& p);

/// Quadrature values of the deterministic limit criteria against the
/// stationary law restricted to {x > tau}:
///   G(theta1) = int [log sigma^2(x,theta1) + sigma^2(x,theta1_0)/sigma^2(x,theta1)] nu(dx)
///   L(theta2) = int [ (b(x,theta2)-b(x,theta2_0)) / sigma(x,theta1_0) ]^2 nu(dx)
/// Diagnostic surfaces: each attains its minimum at the true coordinate.
struct LimitSurfaces {
  std::vector<double> g;  // G over theta_grid (read as theta1)
  std::vector<double> l;  // L over theta_grid (read as theta2)
};

/// Requires a model with an invariant density (UnsupportedModelError otherwise).
LimitSurfaces limit_surfaces(const DiffusionModel& model, const ParamPoint& theta0,
                             double tau, std::span<const double> theta_grid);

}  // namespace hde
