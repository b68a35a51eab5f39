#include "hde/estimate.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "hde/asymptotics.hpp"
#include "hde/errors.hpp"

namespace hde {

namespace {

std::size_t count_usable_pairs(const PartialObservations& obs) {
  return usable_pairs(obs).size();
}

void require_pairs(std::size_t pairs) {
  if (pairs < kMinUsablePairs) {
    throw InsufficientDataError("estimation needs >= " + std::to_string(kMinUsablePairs) +
                                " usable pairs, got " + std::to_string(pairs));
  }
}

StageEstimate run_stage(const std::function<double(double)>& objective, double lo,
                        double hi, double tol) {
  const MinimizeResult fit = minimize_scalar(objective, lo, hi, tol);
  StageEstimate stage;
  stage.theta_hat = fit.argmin;
  stage.evals = fit.evals;
  stage.at_boundary = (fit.argmin - lo <= tol) || (hi - fit.argmin <= tol);
  return stage;
}

}  // namespace

StageEstimate estimate_theta1(const PartialObservations& obs, const DiffusionModel& model,
                              const ParamRectangle& rect, double tol) {
  require_pairs(count_usable_pairs(obs));
  return run_stage(
      [&](double theta1) { return g_contrast(obs, model, theta1).value; },
      rect.theta1_min, rect.theta1_max, tol);
}

StageEstimate estimate_theta2(const PartialObservations& obs, const DiffusionModel& model,
                              double theta1_hat, const ParamRectangle& rect, double tol) {
  require_pairs(count_usable_pairs(obs));
  return run_stage(
      [&](double theta2) {
        return l_contrast(obs, model, ParamPoint{theta1_hat, theta2}).value;
      },
      rect.theta2_min, rect.theta2_max, tol);
}

EstimationResult two_stage_estimate(const PartialObservations& obs,
                                    const DiffusionModel& model,
                                    const ParamRectangle& rect, double tol) {
  const std::size_t pairs = count_usable_pairs(obs);
  require_pairs(pairs);

  const StageEstimate stage1 = estimate_theta1(obs, model, rect, tol);
  const StageEstimate stage2 = estimate_theta2(obs, model, stage1.theta_hat, rect, tol);

  EstimationResult result;
  result.theta_hat = ParamPoint{stage1.theta_hat, stage2.theta_hat};
  result.n_pairs = pairs;
  result.at_boundary1 = stage1.at_boundary;
  result.at_boundary2 = stage2.at_boundary;
  result.optimizer_evals = stage1.evals + stage2.evals;

  const SigmaMatrix sigma_hat = empirical_sigma(obs, model, result.theta_hat);
  const double n = static_cast<double>(obs.intervals());
  if (sigma_hat.nonsingular()) {
    result.se1 = std::sqrt(sigma_hat.inv11() / n);
    result.se2 = std::sqrt(sigma_hat.inv22() / (n * obs.h_n));
  } else {
    result.sigma_singular = true;
    result.se1 = std::numeric_limits<double>::infinity();
    result.se2 = std::numeric_limits<double>::infinity();
  }
  return result;
}

}  // namespace hde
