#pragma once

#include <functional>
#include <string>
#include <utility>

#include "hde/rng.hpp"

namespace hde {

/// A point theta = (theta1, theta2) of the parameter rectangle. theta1
/// enters the diffusion coefficient, theta2 the drift.
struct ParamPoint {
  double theta1 = 1.0;
  double theta2 = 1.0;

  friend bool operator==(const ParamPoint&, const ParamPoint&) = default;
};

/// The compact rectangle Theta = [t1min, t1max] x [t2min, t2max] the
/// estimators search; the true value is assumed interior.
struct ParamRectangle {
  double theta1_min = 0.1;
  double theta1_max = 10.0;
  double theta2_min = 0.1;
  double theta2_max = 10.0;

  bool valid() const { return theta1_min < theta1_max && theta2_min < theta2_max; }
  bool contains(const ParamPoint& p) const {
    return p.theta1 >= theta1_min && p.theta1 <= theta1_max &&
           p.theta2 >= theta2_min && p.theta2 <= theta2_max;
  }

  friend bool operator==(const ParamRectangle&, const ParamRectangle&) = default;
};

/// One-dimensional parametric diffusion dX = b(X, theta2) dt + sigma(X, theta1) dW
/// together with the analytic theta-derivatives of its coefficients. The
/// builtin registry only admits families with sigma bounded away from zero
/// on the default rectangle. All members are pure functions of their
/// arguments; instances are safe to share across threads.
struct DiffusionModel {
  std::string name;
  std::function<double(double x, double theta2)> drift;
  std::function<double(double x, double theta1)> diffusion;
  std::function<double(double x, double theta1)> d_theta1_sigma;
  std::function<double(double x, double theta2)> d_theta2_b;
  /// Stationary density of the process at theta0, normalized to unit mass;
  /// empty when the family does not expose one.
  std::function<double(double x, const ParamPoint& theta0)> invariant_density;
  /// Exact sampler from the stationary law, set only when the law is in
  /// closed form (OU); others fall back to a burn-in path.
  std::function<double(const ParamPoint& theta0, Rng& rng)> stationary_sampler;

  bool has_invariant_density() const { return static_cast<bool>(invariant_density); }
  bool has_exact_sampler() const { return static_cast<bool>(stationary_sampler); }
};

/// Registry lookup. Names: "ou" (linear drift, constant sigma, Gaussian
/// stationary law), "hyperbolic" (bounded nonlinear drift, constant sigma),
/// "tanh_drift" (bounded drift, state-dependent sigma). Throws RegistryError
/// for anything else.
DiffusionModel builtin_model(const std::string& name);

/// Analytic derivatives (d b / d theta2, d sigma / d theta1) at (x, p).
std::pair<double, double> eval_derivatives(const DiffusionModel& model, double x,
                                           const ParamPoint& p);

}  // namespace hde
