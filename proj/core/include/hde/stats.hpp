#pragma once

#include <cstddef>
#include <span>

namespace hde {

/// Standard normal CDF via erfc (accurate over the full double range).
double normal_cdf(double x);

/// Standard normal quantile, Wichura's AS 241 (PPND16), |error| < 1e-15.
/// Requires p in (0, 1); throws NumericError otherwise.
double normal_quantile(double p);

double mean(std::span<const double> xs);

/// Population variance (divisor m). Returns 0 for a single element.
double population_variance(std::span<const double> xs);

/// Population skewness m3 / s^3. NaN when fewer than 2 elements or s == 0.
double skewness(std::span<const double> xs);

/// Population excess kurtosis m4 / s^4 - 3. NaN under the same degeneracies.
double excess_kurtosis(std::span<const double> xs);

/// Kolmogorov-Smirnov distance between the empirical CDF of xs and the
/// standard normal distribution. NaN when xs is empty.
double ks_distance_normal(std::span<const double> xs);

/// Pearson correlation; NaN when either marginal is degenerate.
double pearson_correlation(std::span<const double> xs, std::span<const double> ys);

}  // namespace hde
