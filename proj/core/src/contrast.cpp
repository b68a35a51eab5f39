#include "hde/contrast.hpp"

#include <cmath>

#include "hde/errors.hpp"
#include "hde/invariant.hpp"

namespace hde {

namespace {

// Left-to-right compensated accumulation: the sums run to 1e5 terms of
// similar magnitude and their bytes are part of the reproducibility contract.
struct KahanSum {
  double sum = 0.0;
  double carry = 0.0;
  void add(double x) {
    const double y = x - carry;
    const double t = sum + y;
    carry = (t - sum) - y;
    sum = t;
  }
};

}  // namespace

ContrastValue g_contrast(const PartialObservations& obs, const DiffusionModel& model,
                         double theta1) {
  const double tau = obs.threshold.tau;
  const double tau_prime = obs.threshold.tau_prime;
  const double h = obs.h_n;
  KahanSum acc;
  std::int64_t terms = 0;
  for (std::size_t i = 1; i < obs.values.size(); ++i) {
    const double prev = obs.values[i - 1];
    const double cur = obs.values[i];
    if (prev > tau_prime && cur > tau) {
      const double sigma = model.diffusion(prev, theta1);
      const double s2 = sigma * sigma;
      const double dx = cur - prev;
      acc.add(std::log(s2) + dx * dx / (s2 * h));
      ++terms;
    }
  }
  if (terms == 0) {
    throw InsufficientDataError("g_contrast: no indicator-active pair");
  }
  return ContrastValue{acc.sum, terms};
}

ContrastValue l_contrast(const PartialObservations& obs, const DiffusionModel& model,
                         const ParamPoint& p) {
  const double tau = obs.threshold.tau;
  const double tau_prime = obs.threshold.tau_prime;
  const double h = obs.h_n;
  KahanSum acc;
  std::int64_t terms = 0;
  for (std::size_t i = 1; i < obs.values.size(); ++i) {
    const double prev = obs.values[i - 1];
    const double cur = obs.values[i];
    if (prev > tau_prime && cur > tau) {
      const double sigma = model.diffusion(prev, p.theta1);
      const double s2 = sigma * sigma;
      const double r = (cur - prev) - model.drift(prev, p.theta2) * h;
      acc.add(std::log(s2) + r * r / (s2 * h));
      ++terms;
    }
  }
  if (terms == 0) {
    throw InsufficientDataError("l_contrast: no indicator-active pair");
  }
  return ContrastValue{acc.sum, terms};
}

LimitSurfaces limit_surfaces(const DiffusionModel& model, const ParamPoint& theta0,
                             double tau, std::span<const double> theta_grid) {
  const InvariantSummary inv = invariant_summary(model, theta0);
  const double lo = std::isfinite(tau) ? tau : inv.mean - 50.0 * inv.sd;
  const double hi = std::max(inv.mean, lo) + 50.0 * inv.sd;

  LimitSurfaces surfaces;
  surfaces.g.reserve(theta_grid.size());
  surfaces.l.reserve(theta_grid.size());
  for (double theta : theta_grid) {
    surfaces.g.push_back(integrate_against_density(
        model, theta0,
        [&](double x) {
          const double s = model.diffusion(x, theta);
          const double s_true = model.diffusion(x, theta0.theta1);
          return std::log(s * s) + (s_true * s_true) / (s * s);
        },
        lo, hi, 1e-10));
    surfaces.l.push_back(integrate_against_density(
        model, theta0,
        [&](double x) {
          const double db = model.drift(x, theta) - model.drift(x, theta0.theta2);
          const double s_true = model.diffusion(x, theta0.theta1);
          return db * db / (s_true * s_true);
        },
        lo, hi, 1e-10));
  }
  return surfaces;
}

}  // namespace hde
