#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hde/mc.hpp"
#include "hde/model.hpp"

namespace hde::cli {

/// Flat key = value run configuration ('#' comments, one pair per line).
/// Mirrors ExperimentConfig plus file paths and tool options; every field
/// has a default so an empty document parses. Unknown keys are rejected.
struct RunConfig {
  std::string model;  // empty until set; subcommands needing one insist
  double theta1 = 1.0;
  double theta2 = 1.0;
  double tau = 0.0;
  double alpha = 0.25;
  double gamma = 0.6;
  double h = 0.0;  // 0 = derive h from gamma as n^-gamma
  std::size_t n = 10000;
  std::vector<std::size_t> n_list;  // empty = {n}
  std::size_t refine = 10;
  std::size_t replications = 100;
  std::uint64_t seed = 0;
  double ci_level = 0.95;
  ParamRectangle rect;
  double tol = 1e-6;
  unsigned jobs = 1;
  std::string input;
  std::string output;
  std::string summary_output;

  ExperimentConfig experiment() const;

  friend bool operator==(const RunConfig&, const RunConfig&) = default;
};

/// Parses and validates; throws ParseError naming the offending line.
RunConfig parse_config(const std::string& text);

/// Every field, one per line, reparsable by parse_config to an equal value.
std::string serialize_config(const RunConfig& cfg);

/// Field-level preconditions (alpha in (0,1/2), gamma in (1/2,1), theta0
/// inside the rectangle, ...). Used by parse_config and re-run after CLI
/// flag overrides.
void validate_config(const RunConfig& cfg);

}  // namespace hde::cli
