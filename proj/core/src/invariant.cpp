#include "hde/invariant.hpp"

#include <cmath>

#include "hde/errors.hpp"
#include "hde/quadrature.hpp"

namespace hde {

InvariantSummary invariant_summary(const DiffusionModel& model, const ParamPoint& theta0) {
  if (!model.has_invariant_density()) {
    throw UnsupportedModelError("model '" + model.name + "' exposes no invariant density");
  }
  const auto density = [&](double x) { return model.invariant_density(x, theta0); };
  double half = 1.0;
  double mass = 0.0;
  while (half <= 1048576.0) {
    mass = adaptive_simpson(density, -half, half, 1e-10);
    if (mass >= 1.0 - 1e-9) break;
    half *= 2.0;
  }
  if (mass < 1.0 - 1e-9) {
    throw NumericError("invariant_summary: density mass did not converge for '" +
                       model.name + "'");
  }
  const double m1 =
      adaptive_simpson([&](double x) { return x * density(x); }, -half, half, 1e-10);
  const double m2 =
      adaptive_simpson([&](double x) { return x * x * density(x); }, -half, half, 1e-10);
  InvariantSummary s;
  s.mean = m1;
  s.sd = std::sqrt(std::max(m2 - m1 * m1, 1e-300));
  s.half_width = half;
  return s;
}

double integrate_against_density(const DiffusionModel& model, const ParamPoint& theta0,
                                 const std::function<double(double)>& f, double lo,
                                 double hi, double tol) {
  if (!model.has_invariant_density()) {
    throw UnsupportedModelError("model '" + model.name + "' exposes no invariant density");
  }
  return adaptive_simpson(
      [&](double x) { return f(x) * model.invariant_density(x, theta0); }, lo, hi, tol);
}

}  // namespace hde
