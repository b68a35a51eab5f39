#pragma once

#include <functional>

namespace hde {

struct MinimizeResult {
  double argmin = 0.0;
  int evals = 0;
};

/// Derivative-free scalar minimization on [lo, hi]: 65-point grid scan to
/// bracket the global grid minimum, then golden-section refinement of the
/// bracketing cell until its width is below tol. Fully deterministic; ties
/// resolve to the smallest abscissa (a constant objective returns lo).
/// A non-finite objective value raises NumericError; objective exceptions
/// propagate.
MinimizeResult minimize_scalar(const std::function<double(double)>& f, double lo,
                               double hi, double tol);

}  // namespace hde
