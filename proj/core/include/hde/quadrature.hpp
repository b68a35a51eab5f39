#pragma once

#include <functional>

namespace hde {

/// Adaptive Simpson integration of f over [a, b] to absolute tolerance
/// abs_tol. The interval is bisected until the local Richardson estimate
/// |S2 - S1|/15 meets the (split) tolerance; throws NumericError if the
/// recursion depth cap is hit with the estimate still above tolerance.
double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                        double abs_tol, int max_depth = 52);

}  // namespace hde
