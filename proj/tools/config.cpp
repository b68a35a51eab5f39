#include "config.hpp"

#include <charconv>
#include <cmath>
#include <sstream>

#include "hde/csv.hpp"
#include "hde/errors.hpp"

namespace hde::cli {

namespace {

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t");
  if (begin == std::string::npos) return "";
  const auto end = s.find_last_not_of(" \t");
  return s.substr(begin, end - begin + 1);
}

std::uint64_t parse_uint(const std::string& field, const std::string& where) {
  std::uint64_t value = 0;
  const char* begin = field.data();
  const char* end = begin + field.size();
  const auto res = std::from_chars(begin, end, value);
  if (field.empty() || res.ec != std::errc{} || res.ptr != end) {
    throw ParseError(where + ": malformed unsigned integer '" + field + "'");
  }
  return value;
}

std::vector<std::size_t> parse_n_list(const std::string& field, const std::string& where) {
  std::vector<std::size_t> out;
  if (trim(field).empty()) return out;
  std::size_t start = 0;
  for (;;) {
    const std::size_t comma = field.find(',', start);
    const std::string item =
        trim(comma == std::string::npos ? field.substr(start)
                                        : field.substr(start, comma - start));
    out.push_back(static_cast<std::size_t>(parse_uint(item, where)));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace

ExperimentConfig RunConfig::experiment() const {
  ExperimentConfig cfg;
  cfg.model_name = model;
  cfg.theta0 = ParamPoint{theta1, theta2};
  cfg.rect = rect;
  cfg.tau = tau;
  cfg.alpha = alpha;
  cfg.n_list = n_list.empty() ? std::vector<std::size_t>{n} : n_list;
  cfg.gamma = gamma;
  cfg.refine = refine;
  cfg.replications = replications;
  cfg.seed_base = seed;
  cfg.ci_level = ci_level;
  cfg.tol = tol;
  return cfg;
}

RunConfig parse_config(const std::string& text) {
  RunConfig cfg;
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string where = "line " + std::to_string(lineno);
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ParseError(where + ": expected 'key = value'");
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));

    if (key == "model") {
      cfg.model = value;
    } else if (key == "theta1") {
      cfg.theta1 = parse_double(value, where);
    } else if (key == "theta2") {
      cfg.theta2 = parse_double(value, where);
    } else if (key == "tau") {
      cfg.tau = parse_double(value, where);
    } else if (key == "alpha") {
      cfg.alpha = parse_double(value, where);
    } else if (key == "gamma") {
      cfg.gamma = parse_double(value, where);
    } else if (key == "h") {
      cfg.h = parse_double(value, where);
    } else if (key == "n") {
      cfg.n = static_cast<std::size_t>(parse_uint(value, where));
    } else if (key == "n_list") {
      cfg.n_list = parse_n_list(value, where);
    } else if (key == "refine") {
      cfg.refine = static_cast<std::size_t>(parse_uint(value, where));
    } else if (key == "replications") {
      cfg.replications = static_cast<std::size_t>(parse_uint(value, where));
    } else if (key == "seed") {
      cfg.seed = parse_uint(value, where);
    } else if (key == "ci_level") {
      cfg.ci_level = parse_double(value, where);
    } else if (key == "theta1_min") {
      cfg.rect.theta1_min = parse_double(value, where);
    } else if (key == "theta1_max") {
      cfg.rect.theta1_max = parse_double(value, where);
    } else if (key == "theta2_min") {
      cfg.rect.theta2_min = parse_double(value, where);
    } else if (key == "theta2_max") {
      cfg.rect.theta2_max = parse_double(value, where);
    } else if (key == "tol") {
      cfg.tol = parse_double(value, where);
    } else if (key == "jobs") {
      cfg.jobs = static_cast<unsigned>(parse_uint(value, where));
    } else if (key == "input") {
      cfg.input = value;
    } else if (key == "output") {
      cfg.output = value;
    } else if (key == "summary_output") {
      cfg.summary_output = value;
    } else {
      throw ParseError(where + ": unknown key '" + key + "'");
    }
  }
  validate_config(cfg);
  return cfg;
}

std::string serialize_config(const RunConfig& cfg) {
  std::ostringstream out;
  out << "model = " << cfg.model << '\n';
  out << "theta1 = " << format_double(cfg.theta1) << '\n';
  out << "theta2 = " << format_double(cfg.theta2) << '\n';
  out << "tau = " << format_double(cfg.tau) << '\n';
  out << "alpha = " << format_double(cfg.alpha) << '\n';
  out << "gamma = " << format_double(cfg.gamma) << '\n';
  out << "h = " << format_double(cfg.h) << '\n';
  out << "n = " << cfg.n << '\n';
  out << "n_list = ";
  for (std::size_t i = 0; i < cfg.n_list.size(); ++i) {
    if (i) out << ',';
    out << cfg.n_list[i];
  }
  out << '\n';
  out << "refine = " << cfg.refine << '\n';
  out << "replications = " << cfg.replications << '\n';
  out << "seed = " << cfg.seed << '\n';
  out << "ci_level = " << format_double(cfg.ci_level) << '\n';
  out << "theta1_min = " << format_double(cfg.rect.theta1_min) << '\n';
  out << "theta1_max = " << format_double(cfg.rect.theta1_max) << '\n';
  out << "theta2_min = " << format_double(cfg.rect.theta2_min) << '\n';
  out << "theta2_max = " << format_double(cfg.rect.theta2_max) << '\n';
  out << "tol = " << format_double(cfg.tol) << '\n';
  out << "jobs = " << cfg.jobs << '\n';
  out << "input = " << cfg.input << '\n';
  out << "output = " << cfg.output << '\n';
  out << "summary_output = " << cfg.summary_output << '\n';
  return out.str();
}

void validate_config(const RunConfig& cfg) {
  if (!(cfg.alpha > 0.0 && cfg.alpha < 0.5)) {
    throw ParseError("alpha must lie in the open interval (0, 0.5)");
  }
  if (!(cfg.gamma > 0.5 && cfg.gamma < 1.0)) {
    throw ParseError("gamma must lie in the open interval (0.5, 1)");
  }
  if (cfg.h != 0.0 && !(cfg.h > 0.0)) {
    throw ParseError("h must be positive (or 0 to derive it from gamma)");
  }
  if (cfg.n < 1) throw ParseError("n must be >= 1");
  for (std::size_t n : cfg.n_list) {
    if (n < 1) throw ParseError("n_list entries must be >= 1");
  }
  if (cfg.refine < 1) throw ParseError("refine must be >= 1");
  if (cfg.replications < 1) throw ParseError("replications must be >= 1");
  if (!(cfg.ci_level > 0.0 && cfg.ci_level < 1.0)) {
    throw ParseError("ci_level must lie in (0, 1)");
  }
  if (!cfg.rect.valid()) {
    throw ParseError("parameter rectangle needs min < max in each coordinate");
  }
  if (!(cfg.rect.contains(ParamPoint{cfg.theta1, cfg.theta2}))) {
    throw ParseError("theta = (" + format_double(cfg.theta1) + ", " +
                     format_double(cfg.theta2) + ") lies outside the parameter rectangle");
  }
  if (!(cfg.tol > 0.0)) throw ParseError("tol must be positive");
  if (cfg.jobs < 1) throw ParseError("jobs must be >= 1");
}

}  // namespace hde::cli
