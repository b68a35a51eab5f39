#include "hde/censor.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "hde/errors.hpp"

namespace hde {

ThresholdSpec effective_threshold(double tau, double h_n, double alpha) {
  if (!(h_n > 0.0 && h_n < 1.0)) {
    throw Error("effective_threshold: h_n = " + std::to_string(h_n) +
                " outside (0,1); h^alpha would not shrink");
  }
  if (!(alpha > 0.0 && alpha < 0.5)) {
    throw Error("effective_threshold: alpha = " + std::to_string(alpha) +
                " outside the open interval (0, 1/2)");
  }
  return ThresholdSpec{tau, alpha, tau + std::pow(h_n, alpha)};
}

PartialObservations apply_threshold(const std::vector<double>& times,
                                    const std::vector<double>& values, double h_n,
                                    double tau, double alpha) {
  PartialObservations obs;
  obs.times = times;
  obs.h_n = h_n;
  obs.threshold = effective_threshold(tau, h_n, alpha);
  obs.values.resize(values.size());
  obs.visible.resize(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    const bool vis = values[i] > tau;  // NaN compares false: hidden stays hidden
    obs.visible[i] = vis ? 1 : 0;
    obs.values[i] = vis ? values[i] : std::numeric_limits<double>::quiet_NaN();
  }
  return obs;
}

PartialObservations apply_threshold(const Trajectory& traj, double tau, double alpha) {
  return apply_threshold(traj.times, traj.values, traj.scheme.h_n, tau, alpha);
}

std::vector<std::size_t> usable_pairs(const PartialObservations& obs) {
  std::vector<std::size_t> pairs;
  const double tau = obs.threshold.tau;
  const double tau_prime = obs.threshold.tau_prime;
  for (std::size_t i = 1; i < obs.values.size(); ++i) {
    if (obs.values[i - 1] > tau_prime && obs.values[i] > tau) {
      pairs.push_back(i);
    }
  }
  return pairs;
}

}  // namespace hde
