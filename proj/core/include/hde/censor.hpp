#pragma once

#include <cstddef>
#include <vector>

#include "hde/simulate.hpp"

namespace hde {

/// Hiding threshold tau plus the elevated threshold tau' = tau + h_n^alpha
/// used in the pair indicator {X_{i-1} > tau', X_i > tau}.
struct ThresholdSpec {
  double tau = 0.0;
  double alpha = 0.25;
  double tau_prime = 0.0;

  friend bool operator==(const ThresholdSpec&, const ThresholdSpec&) = default;
};

/// tau' = tau + h_n^alpha. Requires h_n in (0,1) (otherwise h^alpha does not
/// shrink) and alpha strictly inside (0, 1/2).
ThresholdSpec effective_threshold(double tau, double h_n, double alpha);

/// The partially hidden series: values[i] is the observation when
/// X_i > tau and a quiet NaN sentinel otherwise; visible[i] mirrors that.
struct PartialObservations {
  std::vector<double> times;
  std::vector<double> values;   // NaN where hidden
  std::vector<char> visible;    // 1 where values[i] is a real observation
  ThresholdSpec threshold;
  double h_n = 0.0;

  std::size_t intervals() const { return times.empty() ? 0 : times.size() - 1; }
};

/// Censors a trajectory at tau (strict: a value equal to tau is hidden).
PartialObservations apply_threshold(const Trajectory& traj, double tau, double alpha);

/// Same, on an already-censored or raw value series with known spacing h_n.
/// Hidden (NaN) entries stay hidden; re-censoring at the same tau is the
/// identity.
PartialObservations apply_threshold(const std::vector<double>& times,
                                    const std::vector<double>& values, double h_n,
                                    double tau, double alpha);

/// All i in {1..n} with values[i-1] > tau' and values[i] > tau -- the
/// indicator-active pairs of the contrasts. Both conditions are decidable
/// from the censored series alone. An empty result is legal here.
std::vector<std::size_t> usable_pairs(const PartialObservations& obs);

}  // namespace hde
