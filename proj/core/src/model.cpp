#include "hde/model.hpp"

#include <cmath>

#include "hde/errors.hpp"
#include "hde/quadrature.hpp"

namespace hde {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Integration half-width covering the exponential tails exp(-2*theta2*|x|/theta1^2)
// of the non-Gaussian builtin stationary laws down to ~exp(-80).
double tail_halfwidth(const ParamPoint& p) {
  return 1.0 + 40.0 * p.theta1 * p.theta1 / p.theta2;
}

// --- ou: b = -theta2 x, sigma = theta1 ------------------------------------

double ou_density(double x, const ParamPoint& p) {
  // N(0, theta1^2 / (2 theta2))
  const double k = p.theta2 / (p.theta1 * p.theta1);
  return std::sqrt(k / kPi) * std::exp(-k * x * x);
}

// --- hyperbolic: b = -theta2 x / sqrt(1+x^2), sigma = theta1 ---------------

double hyperbolic_unnormalized(double x, const ParamPoint& p) {
  return std::exp(-2.0 * p.theta2 * std::sqrt(1.0 + x * x) / (p.theta1 * p.theta1));
}

double hyperbolic_density(double x, const ParamPoint& p) {
  // One-slot memo per thread: quadrature loops evaluate at a fixed theta0.
  thread_local ParamPoint cached{-1.0, -1.0};
  thread_local double cached_z = 0.0;
  if (!(p == cached)) {
    const double half = tail_halfwidth(p);
    cached_z = adaptive_simpson([&p](double y) { return hyperbolic_unnormalized(y, p); },
                                -half, half, 1e-12);
    cached = p;
  }
  return hyperbolic_unnormalized(x, p) / cached_z;
}

// --- tanh_drift: b = -theta2 tanh(x), sigma = theta1 (1 + 0.5/(1+x^2)) -----

double tanh_sigma(double x, double theta1) {
  return theta1 * (1.0 + 0.5 / (1.0 + x * x));
}

// Speed-measure form m(x) = sigma^-2(x) exp( int_0^x 2 b / sigma^2 dy ).
double tanh_unnormalized(double x, const ParamPoint& p) {
  const auto integrand = [&p](double y) {
    const double s = tanh_sigma(y, p.theta1);
    return -2.0 * p.theta2 * std::tanh(y) / (s * s);
  };
  double expo;
  if (x >= 0.0) {
    expo = x == 0.0 ? 0.0 : adaptive_simpson(integrand, 0.0, x, 1e-11);
  } else {
    expo = -adaptive_simpson(integrand, x, 0.0, 1e-11);
  }
  const double s = tanh_sigma(x, p.theta1);
  return std::exp(expo) / (s * s);
}

double tanh_density(double x, const ParamPoint& p) {
  thread_local ParamPoint cached{-1.0, -1.0};
  thread_local double cached_z = 0.0;
  if (!(p == cached)) {
    const double half = tail_halfwidth(p);
    cached_z = adaptive_simpson([&p](double y) { return tanh_unnormalized(y, p); },
                                -half, half, 1e-12);
    cached = p;
  }
  return tanh_unnormalized(x, p) / cached_z;
}

}  // namespace

DiffusionModel builtin_model(const std::string& name) {
  if (name == "ou") {
    DiffusionModel m;
    m.name = "ou";
    m.drift = [](double x, double theta2) { return -theta2 * x; };
    m.diffusion = [](double, double theta1) { return theta1; };
    m.d_theta1_sigma = [](double, double) { return 1.0; };
    m.d_theta2_b = [](double x, double) { return -x; };
    m.invariant_density = ou_density;
    m.stationary_sampler = [](const ParamPoint& p, Rng& rng) {
      return p.theta1 / std::sqrt(2.0 * p.theta2) * rng.normal();
    };
    return m;
  }
  if (name == "hyperbolic") {
    DiffusionModel m;
    m.name = "hyperbolic";
    m.drift = [](double x, double theta2) { return -theta2 * x / std::sqrt(1.0 + x * x); };
    m.diffusion = [](double, double theta1) { return theta1; };
    m.d_theta1_sigma = [](double, double) { return 1.0; };
    m.d_theta2_b = [](double x, double) { return -x / std::sqrt(1.0 + x * x); };
    m.invariant_density = hyperbolic_density;
    return m;
  }
  if (name == "tanh_drift") {
    DiffusionModel m;
    m.name = "tanh_drift";
    m.drift = [](double x, double theta2) { return -theta2 * std::tanh(x); };
    m.diffusion = tanh_sigma;
    m.d_theta1_sigma = [](double x, double) { return 1.0 + 0.5 / (1.0 + x * x); };
    m.d_theta2_b = [](double x, double) { return -std::tanh(x); };
    m.invariant_density = tanh_density;
    return m;
  }
  throw RegistryError("unknown model '" + name + "' (expected ou, hyperbolic or tanh_drift)");
}

std::pair<double, double> eval_derivatives(const DiffusionModel& model, double x,
                                           const ParamPoint& p) {
  return {model.d_theta2_b(x, p.theta2), model.d_theta1_sigma(x, p.theta1)};
}

}  // namespace hde
