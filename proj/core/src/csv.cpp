#include "hde/csv.hpp"

#include <charconv>
#include <cmath>
#include <istream>
#include <limits>
#include <ostream>

#include "hde/errors.hpp"

namespace hde {

std::string format_double(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), x,
                                 std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

double parse_double(const std::string& field, const std::string& context) {
  double value = 0.0;
  const char* begin = field.data();
  const char* end = begin + field.size();
  const auto res = std::from_chars(begin, end, value);
  if (field.empty() || res.ec != std::errc{} || res.ptr != end) {
    throw ParseError(context + ": malformed number '" + field + "'");
  }
  return value;
}

namespace {

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> fields;
  std::size_t start = 0;
  for (;;) {
    const std::size_t comma = line.find(',', start);
    if (comma == std::string::npos) {
      fields.push_back(line.substr(start));
      return fields;
    }
    fields.push_back(line.substr(start, comma - start));
    start = comma + 1;
  }
}

bool next_line(std::istream& in, std::string& line) {
  if (!std::getline(in, line)) return false;
  if (!line.empty() && line.back() == '\r') line.pop_back();
  return true;
}

void validate_uniform_grid(const std::vector<double>& times, double* h_out) {
  if (times.size() < 2) {
    throw ParseError("series needs at least two rows");
  }
  const double t0 = times.front();
  const double h = (times.back() - t0) / static_cast<double>(times.size() - 1);
  if (!(h > 0.0)) throw ParseError("time grid is not increasing");
  for (std::size_t i = 1; i < times.size(); ++i) {
    if (!(times[i] > times[i - 1])) {
      throw ParseError("time grid not strictly increasing at row " + std::to_string(i + 2));
    }
    const double expected = t0 + static_cast<double>(i) * h;
    if (std::fabs(times[i] - expected) > 1e-12 * std::max(1.0, std::fabs(times[i]))) {
      throw ParseError("time grid not uniform at row " + std::to_string(i + 2));
    }
  }
  *h_out = h;
}

}  // namespace

void write_trajectory_csv(std::ostream& out, const std::vector<double>& times,
                          const std::vector<double>& values) {
  out << "t,x\n";
  for (std::size_t i = 0; i < times.size(); ++i) {
    out << format_double(times[i]) << ',' << format_double(values[i]) << '\n';
  }
}

GridSeries read_trajectory_csv(std::istream& in) {
  std::string line;
  if (!next_line(in, line) || line != "t,x") {
    throw ParseError("line 1: expected header 't,x'");
  }
  GridSeries series;
  std::size_t lineno = 1;
  while (next_line(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    const auto fields = split_fields(line);
    if (fields.size() != 2) {
      throw ParseError("line " + std::to_string(lineno) + ": expected 2 fields");
    }
    const std::string where = "line " + std::to_string(lineno);
    series.times.push_back(parse_double(fields[0], where));
    series.values.push_back(parse_double(fields[1], where));
    series.visible.push_back(1);
  }
  validate_uniform_grid(series.times, &series.h_n);
  return series;
}

void write_censored_csv(std::ostream& out, const PartialObservations& obs) {
  out << "t,x,visible\n";
  for (std::size_t i = 0; i < obs.times.size(); ++i) {
    out << format_double(obs.times[i]) << ',';
    if (obs.visible[i]) out << format_double(obs.values[i]);
    out << ',' << (obs.visible[i] ? '1' : '0') << '\n';
  }
}

GridSeries read_censored_csv(std::istream& in) {
  std::string line;
  if (!next_line(in, line) || line != "t,x,visible") {
    throw ParseError("line 1: expected header 't,x,visible'");
  }
  GridSeries series;
  std::size_t lineno = 1;
  while (next_line(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    const auto fields = split_fields(line);
    if (fields.size() != 3) {
      throw ParseError("line " + std::to_string(lineno) + ": expected 3 fields");
    }
    const std::string where = "line " + std::to_string(lineno);
    series.times.push_back(parse_double(fields[0], where));
    if (fields[2] == "1") {
      series.values.push_back(parse_double(fields[1], where));
      series.visible.push_back(1);
    } else if (fields[2] == "0") {
      if (!fields[1].empty()) {
        throw ParseError(where + ": hidden row carries an x value");
      }
      series.values.push_back(std::numeric_limits<double>::quiet_NaN());
      series.visible.push_back(0);
    } else {
      throw ParseError(where + ": visible flag must be 0 or 1");
    }
  }
  validate_uniform_grid(series.times, &series.h_n);
  return series;
}

PartialObservations observations_from_series(const GridSeries& series, double tau,
                                             double alpha) {
  PartialObservations obs;
  obs.times = series.times;
  obs.values = series.values;
  obs.visible = series.visible;
  obs.h_n = series.h_n;
  obs.threshold = effective_threshold(tau, series.h_n, alpha);
  for (std::size_t i = 0; i < obs.values.size(); ++i) {
    if (obs.visible[i] && !(obs.values[i] > tau)) {
      throw ParseError("row " + std::to_string(i + 2) + ": visible value " +
                       format_double(obs.values[i]) + " does not exceed tau = " +
                       format_double(tau));
    }
  }
  return obs;
}

void write_profile_csv(std::ostream& out, const std::vector<double>& thetas,
                       const std::vector<double>& values) {
  out << "theta,value\n";
  for (std::size_t i = 0; i < thetas.size(); ++i) {
    out << format_double(thetas[i]) << ',' << format_double(values[i]) << '\n';
  }
}

}  // namespace hde
