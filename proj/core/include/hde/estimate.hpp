#pragma once

#include <cstddef>

#include "hde/censor.hpp"
#include "hde/contrast.hpp"
#include "hde/model.hpp"
#include "hde/optimize.hpp"

namespace hde {

/// Fewest indicator-active pairs accepted before estimation is attempted;
/// below this the plug-in information is noise.
inline constexpr std::size_t kMinUsablePairs = 30;

/// Output of one minimization stage.
struct StageEstimate {
  double theta_hat = 0.0;
  int evals = 0;
  bool at_boundary = false;  // within tol of a rectangle edge
};

/// Full two-stage result. Standard errors live on their natural scales:
/// se1 ~ 1/sqrt(n * s11) (rate sqrt(n)), se2 ~ 1/sqrt(n h * s22) (rate
/// sqrt(n h)). When the plug-in information matrix is singular the
/// estimates are still returned with infinite standard errors and
/// sigma_singular set.
struct EstimationResult {
  ParamPoint theta_hat;
  double se1 = 0.0;
  double se2 = 0.0;
  std::size_t n_pairs = 0;
  bool at_boundary1 = false;
  bool at_boundary2 = false;
  int optimizer_evals = 0;
  bool sigma_singular = false;
};

/// Stage 1: theta1_hat minimizing g_n over [theta1_min, theta1_max]. The
/// drift is never evaluated. Throws InsufficientDataError below
/// kMinUsablePairs active pairs.
StageEstimate estimate_theta1(const PartialObservations& obs, const DiffusionModel& model,
                              const ParamRectangle& rect, double tol);

/// Stage 2: theta2_hat minimizing l_n(theta1_hat, .) over [theta2_min, theta2_max].
StageEstimate estimate_theta2(const PartialObservations& obs, const DiffusionModel& model,
                              double theta1_hat, const ParamRectangle& rect, double tol);

/// Stage 1 then stage 2, plus plug-in standard errors from the empirical
/// information (see asymptotics). theta1_hat is not revisited after stage 2.
EstimationResult two_stage_estimate(const PartialObservations& obs,
                                    const DiffusionModel& model,
                                    const ParamRectangle& rect, double tol);

}  // namespace hde
