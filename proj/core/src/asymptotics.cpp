#include "hde/asymptotics.hpp"

#include <cmath>
#include <string>

#include "hde/errors.hpp"
#include "hde/invariant.hpp"

namespace hde {

SigmaMatrix sigma_quadrature(const DiffusionModel& model, const ParamPoint& theta0,
                             double tau) {
  const InvariantSummary inv = invariant_summary(model, theta0);
  // Start exactly at tau so the indicator edge is an interval endpoint, not
  // a discontinuity inside a panel.
  const double lo = std::isfinite(tau) ? tau : inv.mean - 50.0 * inv.sd;
  const double hi = std::max(inv.mean, lo) + 50.0 * inv.sd;

  SigmaMatrix sigma;
  sigma.s11 = 2.0 * integrate_against_density(
                        model, theta0,
                        [&](double x) {
                          const double ds = model.d_theta1_sigma(x, theta0.theta1);
                          const double s = model.diffusion(x, theta0.theta1);
                          return (ds / s) * (ds / s);
                        },
                        lo, hi, 1e-10);
  sigma.s22 = integrate_against_density(
      model, theta0,
      [&](double x) {
        const double db = model.d_theta2_b(x, theta0.theta2);
        const double s = model.diffusion(x, theta0.theta1);
        return (db / s) * (db / s);
      },
      lo, hi, 1e-10);
  return sigma;
}

SigmaMatrix empirical_sigma(const PartialObservations& obs, const DiffusionModel& model,
                            const ParamPoint& theta_hat) {
  const std::size_t n = obs.intervals();
  const double tau = obs.threshold.tau;
  const double tau_prime = obs.threshold.tau_prime;
  double sum1 = 0.0;
  double sum2 = 0.0;
  std::size_t pairs = 0;
  for (std::size_t i = 1; i < obs.values.size(); ++i) {
    const double prev = obs.values[i - 1];
    if (prev > tau_prime && obs.values[i] > tau) {
      const double ds = model.d_theta1_sigma(prev, theta_hat.theta1);
      const double s = model.diffusion(prev, theta_hat.theta1);
      const double db = model.d_theta2_b(prev, theta_hat.theta2);
      sum1 += (ds / s) * (ds / s);
      sum2 += (db / s) * (db / s);
      ++pairs;
    }
  }
  if (pairs < kMinUsablePairs) {
    throw InsufficientDataError("empirical_sigma: " + std::to_string(pairs) +
                                " usable pairs < required " +
                                std::to_string(kMinUsablePairs));
  }
  SigmaMatrix sigma;
  sigma.s11 = 2.0 * sum1 / static_cast<double>(n);
  sigma.s22 = sum2 / static_cast<double>(n);
  return sigma;
}

std::pair<double, double> standardize_errors(const EstimationResult& result,
                                             const ParamPoint& theta0,
                                             const SigmaMatrix& sigma, std::size_t n,
                                             double h_n) {
  if (!sigma.nonsingular()) {
    throw NumericError("standardize_errors: singular sigma matrix");
  }
  const double nd = static_cast<double>(n);
  const double z1 =
      std::sqrt(nd) * (result.theta_hat.theta1 - theta0.theta1) * std::sqrt(sigma.s11);
  const double z2 = std::sqrt(nd * h_n) * (result.theta_hat.theta2 - theta0.theta2) *
                    std::sqrt(sigma.s22);
  return {z1, z2};
}

}  // namespace hde
