#include "hde/simulate.hpp"

#include <cmath>
#include <string>

#include "hde/errors.hpp"

namespace hde {

SamplingScheme scheme_from_rate(std::size_t n, double gamma, std::size_t refine,
                                double alpha, std::uint64_t seed) {
  if (!(gamma > 0.5 && gamma < 1.0)) {
    throw RegimeError("gamma = " + std::to_string(gamma) +
                      " outside (0.5, 1): need n h -> inf and n h^2 -> 0");
  }
  SamplingScheme scheme;
  scheme.n = n;
  scheme.h_n = std::pow(static_cast<double>(n), -gamma);
  scheme.refine = refine;
  scheme.alpha = alpha;
  scheme.seed = seed;
  return scheme;
}

double stationary_initial_draw(const DiffusionModel& model, const ParamPoint& theta0,
                               Rng& rng, double burnin_step) {
  if (model.has_exact_sampler()) {
    return model.stationary_sampler(theta0, rng);
  }
  // 50 mean-reversion time constants from a fixed start.
  const double t_burn = 50.0 / theta0.theta2;
  const auto steps = static_cast<std::size_t>(std::ceil(t_burn / burnin_step));
  const double sqrt_h = std::sqrt(burnin_step);
  double x = 0.0;
  for (std::size_t k = 0; k < steps; ++k) {
    x += model.drift(x, theta0.theta2) * burnin_step +
         model.diffusion(x, theta0.theta1) * sqrt_h * rng.normal();
    if (!std::isfinite(x)) {
      throw SimulationBlowupError("burn-in blew up at fine step " + std::to_string(k));
    }
  }
  return x;
}

Trajectory euler_maruyama_path(const DiffusionModel& model, const ParamPoint& theta0,
                               const SamplingScheme& scheme,
                               std::optional<double> x0_override) {
  if (!scheme.valid()) {
    throw Error("invalid sampling scheme (need n >= 1, h_n > 0, refine >= 1, alpha in (0,1/2))");
  }
  Rng rng(scheme.seed);
  const double h_fine = scheme.h_n / static_cast<double>(scheme.refine);
  const double sqrt_h = std::sqrt(h_fine);

  Trajectory traj;
  traj.scheme = scheme;
  traj.model_name = model.name;
  traj.theta0 = theta0;
  traj.times.resize(scheme.n + 1);
  traj.values.resize(scheme.n + 1);

  double x = x0_override ? *x0_override
                         : stationary_initial_draw(model, theta0, rng, h_fine);
  traj.times[0] = 0.0;
  traj.values[0] = x;
  for (std::size_t i = 1; i <= scheme.n; ++i) {
    for (std::size_t k = 0; k < scheme.refine; ++k) {
      x += model.drift(x, theta0.theta2) * h_fine +
           model.diffusion(x, theta0.theta1) * sqrt_h * rng.normal();
      if (!std::isfinite(x)) {
        throw SimulationBlowupError("simulation blew up at fine step " +
                                    std::to_string((i - 1) * scheme.refine + k) +
                                    " (observation " + std::to_string(i) + ")");
      }
    }
    traj.times[i] = static_cast<double>(i) * scheme.h_n;
    traj.values[i] = x;
  }
  return traj;
}

}  // namespace hde
