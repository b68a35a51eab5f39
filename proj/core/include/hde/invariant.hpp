#pragma once

#include <functional>

#include "hde/model.hpp"

namespace hde {

/// Location and scale of the model's stationary law, found by quadrature on
/// an interval doubled until it captures all but 1e-9 of the mass. Used to
/// pick truncation bounds for the limit integrals. Requires an invariant
/// density (UnsupportedModelError otherwise).
struct InvariantSummary {
  double mean = 0.0;
  double sd = 1.0;
  double half_width = 1.0;  // the interval [-half_width, half_width] holds the mass
};

InvariantSummary invariant_summary(const DiffusionModel& model, const ParamPoint& theta0);

/// int_lo^hi f(x) nu_theta0(dx) by adaptive Simpson at absolute tolerance tol.
double integrate_against_density(const DiffusionModel& model, const ParamPoint& theta0,
                                 const std::function<double(double)>& f, double lo,
                                 double hi, double tol);

}  // namespace hde
