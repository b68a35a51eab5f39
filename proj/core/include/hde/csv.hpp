#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "hde/censor.hpp"
#include "hde/simulate.hpp"

namespace hde {

/// All numeric CSV output goes through this: 17 significant digits via
/// std::to_chars (locale-independent, round-trips every double exactly,
/// trailing zeros stripped as in printf %g).
std::string format_double(double x);

/// Strict full-match double parse ("inf"/"-inf"/"nan" accepted); throws
/// ParseError with `context` in the message.
double parse_double(const std::string& field, const std::string& context);

/// Trajectory file: header "t,x", one row per observation point.
void write_trajectory_csv(std::ostream& out, const std::vector<double>& times,
                          const std::vector<double>& values);

struct GridSeries {
  std::vector<double> times;
  std::vector<double> values;  // NaN where the x field is empty
  std::vector<char> visible;
  double h_n = 0.0;
};

/// Reads "t,x" (all rows visible). Validates a uniform, strictly increasing
/// grid to 1e-12 relative and returns the inferred spacing.
GridSeries read_trajectory_csv(std::istream& in);

/// Censored file: header "t,x,visible"; hidden rows have an empty x field
/// and visible=0.
void write_censored_csv(std::ostream& out, const PartialObservations& obs);

/// Reads "t,x,visible" byte-for-byte as written above (empty x <=> visible 0).
GridSeries read_censored_csv(std::istream& in);

/// Rebuilds PartialObservations from a loaded series given the thresholds.
/// Every visible value must exceed tau, or the series and tau disagree.
PartialObservations observations_from_series(const GridSeries& series, double tau,
                                             double alpha);

/// Two-column profile dump (header "theta,value").
void write_profile_csv(std::ostream& out, const std::vector<double>& thetas,
                       const std::vector<double>& values);

}  // namespace hde
