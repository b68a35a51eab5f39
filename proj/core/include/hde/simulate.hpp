#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hde/model.hpp"
#include "hde/rng.hpp"

namespace hde {

/// Observation grid t_i = i h_n for i = 0..n plus the simulation knobs:
/// `refine` fine Euler steps per observation step and the threshold
/// exponent alpha used downstream for tau' = tau + h_n^alpha.
struct SamplingScheme {
  std::size_t n = 0;
  double h_n = 0.0;
  std::size_t refine = 10;
  double alpha = 0.25;
  std::uint64_t seed = 0;

  double horizon() const { return static_cast<double>(n) * h_n; }
  bool valid() const {
    return n >= 1 && h_n > 0.0 && refine >= 1 && alpha > 0.0 && alpha < 0.5;
  }

  friend bool operator==(const SamplingScheme&, const SamplingScheme&) = default;
};

/// h_n tied to n through h = n^-gamma. The CLT regime of the estimators
/// needs n h -> infinity and n h^2 -> 0, i.e. gamma strictly inside (1/2, 1);
/// anything else throws RegimeError.
SamplingScheme scheme_from_rate(std::size_t n, double gamma, std::size_t refine,
                                double alpha, std::uint64_t seed);

/// A fully observed discretized path X_0..X_n on the grid t_i = i h_n.
struct Trajectory {
  std::vector<double> times;
  std::vector<double> values;
  SamplingScheme scheme;
  std::string model_name;
  ParamPoint theta0;

  friend bool operator==(const Trajectory&, const Trajectory&) = default;
};

/// One draw from the stationary law at theta0: exact when the model carries
/// a closed-form sampler, otherwise the endpoint of a burn-in Euler path of
/// 50/theta2 time units started at x = 0 with step burnin_step.
double stationary_initial_draw(const DiffusionModel& model, const ParamPoint& theta0,
                               Rng& rng, double burnin_step = 1e-2);

/// Euler-Maruyama on the fine grid h_n/refine, subsampled to the
/// observation grid. Deterministic given scheme.seed. x0_override forces the
/// starting point (used by deterministic tests); by default X_0 is a
/// stationary draw. Throws SimulationBlowupError (naming the fine-step
/// index) if the state leaves the finite range.
Trajectory euler_maruyama_path(const DiffusionModel& model, const ParamPoint& theta0,
                               const SamplingScheme& scheme,
                               std::optional<double> x0_override = std::nullopt);

}  // namespace hde
