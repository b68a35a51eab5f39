#include "cli.hpp"

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "config.hpp"
#include "hde/asymptotics.hpp"
#include "hde/censor.hpp"
#include "hde/contrast.hpp"
#include "hde/csv.hpp"
#include "hde/errors.hpp"
#include "hde/estimate.hpp"
#include "hde/mc.hpp"
#include "hde/model.hpp"
#include "hde/simulate.hpp"
#include "hde/stats.hpp"

namespace hde::cli {

namespace {

constexpr int kProfilePoints = 201;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write '" + path + "'");
  out << content;
}

// Data sinks honor "stdout for data, stderr for diagnostics": an empty or
// "-" path targets the stream the caller handed in.
void emit(const std::string& path, const std::string& content, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << content;
  } else {
    write_file(path, content);
  }
}

std::string slurp_input(const std::string& path) {
  if (path.empty() || path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  return read_file(path);
}

std::vector<double> linspace(double lo, double hi, int count) {
  std::vector<double> xs(count);
  for (int i = 0; i < count; ++i) {
    xs[i] = lo + (hi - lo) * static_cast<double>(i) / (count - 1);
  }
  return xs;
}

std::uint64_t parse_uint_env(const char* env) {
  const std::string value(env);
  std::uint64_t seed = 0;
  const char* begin = value.data();
  const char* end = begin + value.size();
  const auto res = std::from_chars(begin, end, seed);
  if (value.empty() || res.ec != std::errc{} || res.ptr != end) {
    throw ParseError("HDE_SEED: malformed unsigned integer '" + value + "'");
  }
  return seed;
}

// Per-subcommand scratch shared between option registration and execution.
struct Options {
  std::string config_path;
  std::string model;
  double theta1 = 0.0, theta2 = 0.0;
  std::string tau;  // string-valued: -inf is a legal threshold
  double alpha = 0.0, gamma = 0.0, h = 0.0;
  std::string x0;
  std::uint64_t n = 0;
  std::vector<std::size_t> n_list;
  std::uint64_t refine = 0, replications = 0, seed = 0;
  double level = 0.0, tol = 0.0;
  double t1min = 0.0, t1max = 0.0, t2min = 0.0, t2max = 0.0;
  unsigned jobs = 0;
  std::string input, output, summary_output;
  std::string profile_g, profile_l;
};

// config file < HDE_SEED < explicit flags.
RunConfig merge_config(const CLI::App* cmd, const Options& opt) {
  RunConfig cfg;
  if (!opt.config_path.empty()) cfg = parse_config(read_file(opt.config_path));
  if (const char* env = std::getenv("HDE_SEED")) {
    cfg.seed = parse_uint_env(env);
  }
  const auto given = [&](const std::string& name) {
    const CLI::Option* o = cmd->get_option_no_throw(name);
    return o != nullptr && o->count() > 0;
  };
  if (given("--model")) cfg.model = opt.model;
  if (given("--theta1")) cfg.theta1 = opt.theta1;
  if (given("--theta2")) cfg.theta2 = opt.theta2;
  if (given("--tau")) cfg.tau = parse_double(opt.tau, "--tau");
  if (given("--alpha")) cfg.alpha = opt.alpha;
  if (given("--gamma")) cfg.gamma = opt.gamma;
  if (given("--h")) cfg.h = opt.h;
  if (given("--n")) cfg.n = opt.n;
  if (given("--n-list")) cfg.n_list = opt.n_list;
  if (given("--refine")) cfg.refine = opt.refine;
  if (given("--replications")) cfg.replications = opt.replications;
  if (given("--seed")) cfg.seed = opt.seed;
  if (given("--level")) cfg.ci_level = opt.level;
  if (given("--tol")) cfg.tol = opt.tol;
  if (given("--theta1-min")) cfg.rect.theta1_min = opt.t1min;
  if (given("--theta1-max")) cfg.rect.theta1_max = opt.t1max;
  if (given("--theta2-min")) cfg.rect.theta2_min = opt.t2min;
  if (given("--theta2-max")) cfg.rect.theta2_max = opt.t2max;
  if (given("--jobs")) cfg.jobs = opt.jobs;
  if (given("--input")) cfg.input = opt.input;
  if (given("--output")) cfg.output = opt.output;
  if (given("--summary-output")) cfg.summary_output = opt.summary_output;
  validate_config(cfg);
  return cfg;
}

DiffusionModel require_model(const RunConfig& cfg) {
  if (cfg.model.empty()) {
    throw ParseError("no model selected (--model or 'model =' in the config)");
  }
  return builtin_model(cfg.model);
}

SamplingScheme scheme_from(const RunConfig& cfg) {
  if (cfg.h > 0.0) {
    SamplingScheme scheme{cfg.n, cfg.h, cfg.refine, cfg.alpha, cfg.seed};
    if (!scheme.valid()) throw Error("invalid sampling scheme");
    return scheme;
  }
  return scheme_from_rate(cfg.n, cfg.gamma, cfg.refine, cfg.alpha, cfg.seed);
}

int run_simulate(const CLI::App* cmd, const Options& opt, std::ostream& out) {
  const RunConfig cfg = merge_config(cmd, opt);
  const DiffusionModel model = require_model(cfg);
  std::optional<double> x0;
  if (cmd->get_option_no_throw("--x0")->count() > 0) {
    x0 = parse_double(opt.x0, "--x0");
  }
  const Trajectory traj =
      euler_maruyama_path(model, ParamPoint{cfg.theta1, cfg.theta2}, scheme_from(cfg), x0);
  std::ostringstream buf;
  write_trajectory_csv(buf, traj.times, traj.values);
  emit(cfg.output, buf.str(), out);
  return 0;
}

int run_censor(const CLI::App* cmd, const Options& opt, std::ostream& out) {
  const RunConfig cfg = merge_config(cmd, opt);
  std::istringstream in(slurp_input(cfg.input));
  const GridSeries series = read_trajectory_csv(in);
  const PartialObservations obs =
      apply_threshold(series.times, series.values, series.h_n, cfg.tau, cfg.alpha);
  std::ostringstream buf;
  write_censored_csv(buf, obs);
  emit(cfg.output, buf.str(), out);
  return 0;
}

int run_estimate(const CLI::App* cmd, const Options& opt, std::ostream& out) {
  const RunConfig cfg = merge_config(cmd, opt);
  const DiffusionModel model = require_model(cfg);
  std::istringstream in(slurp_input(cfg.input));
  const PartialObservations obs =
      observations_from_series(read_censored_csv(in), cfg.tau, cfg.alpha);

  const EstimationResult result = two_stage_estimate(obs, model, cfg.rect, cfg.tol);
  const double z = normal_quantile(0.5 * (1.0 + cfg.ci_level));
  std::ostringstream buf;
  buf << "theta1_hat,theta2_hat,se1,se2,n_pairs,ci1_lo,ci1_hi,ci2_lo,ci2_hi\n"
      << format_double(result.theta_hat.theta1) << ','
      << format_double(result.theta_hat.theta2) << ',' << format_double(result.se1)
      << ',' << format_double(result.se2) << ',' << result.n_pairs << ','
      << format_double(result.theta_hat.theta1 - z * result.se1) << ','
      << format_double(result.theta_hat.theta1 + z * result.se1) << ','
      << format_double(result.theta_hat.theta2 - z * result.se2) << ','
      << format_double(result.theta_hat.theta2 + z * result.se2) << '\n';
  emit(cfg.output, buf.str(), out);

  if (!opt.profile_g.empty()) {
    const auto grid = linspace(cfg.rect.theta1_min, cfg.rect.theta1_max, kProfilePoints);
    std::vector<double> values;
    values.reserve(grid.size());
    for (double theta1 : grid) values.push_back(g_contrast(obs, model, theta1).value);
    std::ostringstream profile;
    write_profile_csv(profile, grid, values);
    write_file(opt.profile_g, profile.str());
  }
  if (!opt.profile_l.empty()) {
    const auto grid = linspace(cfg.rect.theta2_min, cfg.rect.theta2_max, kProfilePoints);
    std::vector<double> values;
    values.reserve(grid.size());
    for (double theta2 : grid) {
      values.push_back(
          l_contrast(obs, model, ParamPoint{result.theta_hat.theta1, theta2}).value);
    }
    std::ostringstream profile;
    write_profile_csv(profile, grid, values);
    write_file(opt.profile_l, profile.str());
  }
  return 0;
}

int run_sigma(const CLI::App* cmd, const Options& opt, std::ostream& out) {
  const RunConfig cfg = merge_config(cmd, opt);
  const DiffusionModel model = require_model(cfg);
  const ParamPoint theta0{cfg.theta1, cfg.theta2};
  const SigmaMatrix sigma = sigma_quadrature(model, theta0, cfg.tau);
  if (!sigma.nonsingular()) {
    throw NumericError("Sigma is numerically singular for tau = " +
                       format_double(cfg.tau) +
                       " (no stationary mass above the threshold)");
  }
  std::ostringstream buf;
  buf << "s11,s22,inv11,inv22\n"
      << format_double(sigma.s11) << ',' << format_double(sigma.s22) << ','
      << format_double(sigma.inv11()) << ',' << format_double(sigma.inv22()) << '\n';
  emit(cfg.output, buf.str(), out);

  if (!opt.profile_g.empty()) {
    const auto grid = linspace(cfg.rect.theta1_min, cfg.rect.theta1_max, kProfilePoints);
    const LimitSurfaces surfaces = limit_surfaces(model, theta0, cfg.tau, grid);
    std::ostringstream profile;
    write_profile_csv(profile, grid, surfaces.g);
    write_file(opt.profile_g, profile.str());
  }
  if (!opt.profile_l.empty()) {
    const auto grid = linspace(cfg.rect.theta2_min, cfg.rect.theta2_max, kProfilePoints);
    const LimitSurfaces surfaces = limit_surfaces(model, theta0, cfg.tau, grid);
    std::ostringstream profile;
    write_profile_csv(profile, grid, surfaces.l);
    write_file(opt.profile_l, profile.str());
  }
  return 0;
}

int run_experiment_cmd(const CLI::App* cmd, const Options& opt, std::ostream& out,
                       std::ostream& err) {
  const RunConfig cfg = merge_config(cmd, opt);
  require_model(cfg);
  std::ostringstream records, summary;
  hde::run_experiment(cfg.experiment(), cfg.jobs, &records, &summary);
  const std::string records_path =
      cfg.output.empty() ? std::string("experiment_runs.csv") : cfg.output;
  const std::string summary_path =
      cfg.summary_output.empty() ? std::string("experiment_summary.csv")
                                 : cfg.summary_output;
  emit(records_path, records.str(), out);
  if (records_path != "-") err << "wrote " << records_path << "\n";
  write_file(summary_path, summary.str());
  err << "wrote " << summary_path << "\n";
  return 0;
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"two-stage contrast estimation for threshold-censored diffusions"};
  app.require_subcommand(1);
  app.set_help_flag("--help", "print usage");

  Options opt;
  CLI::App* simulate = app.add_subcommand("simulate", "generate a trajectory CSV (t,x)");
  CLI::App* censor =
      app.add_subcommand("censor", "hide a trajectory below tau (t,x,visible)");
  CLI::App* estimate =
      app.add_subcommand("estimate", "two-stage estimates from a censored CSV");
  CLI::App* sigma = app.add_subcommand("sigma", "asymptotic information matrix entries");
  CLI::App* experiment =
      app.add_subcommand("experiment", "seeded Monte Carlo study of the estimator");

  for (CLI::App* cmd : {simulate, censor, estimate, sigma, experiment}) {
    cmd->set_help_flag("--help", "print usage");
    cmd->add_option("--config", opt.config_path, "flat key = value config file");
    cmd->add_option("--output", opt.output, "output CSV path (default stdout)");
  }
  for (CLI::App* cmd : {simulate, estimate, sigma, experiment}) {
    cmd->add_option("--model", opt.model, "model name: ou | hyperbolic | tanh_drift");
  }
  for (CLI::App* cmd : {simulate, sigma, experiment}) {
    cmd->add_option("--theta1", opt.theta1, "diffusion-coefficient parameter");
    cmd->add_option("--theta2", opt.theta2, "drift parameter");
  }
  for (CLI::App* cmd : {censor, estimate, sigma, experiment}) {
    cmd->add_option("--tau", opt.tau, "hiding threshold (accepts -inf)");
  }
  for (CLI::App* cmd : {simulate, censor, estimate, experiment}) {
    cmd->add_option("--alpha", opt.alpha, "elevated-threshold exponent in (0, 1/2)");
  }
  for (CLI::App* cmd : {simulate, experiment}) {
    cmd->add_option("--gamma", opt.gamma, "h = n^-gamma, gamma in (0.5, 1)");
    cmd->add_option("--refine", opt.refine, "fine Euler steps per observation step");
    cmd->add_option("--seed", opt.seed, "RNG seed (base seed for experiment)");
  }
  for (CLI::App* cmd : {censor, estimate, experiment}) {
    cmd->add_option("--input", opt.input, "input CSV path ('-' = stdin)");
  }
  simulate->add_option("--h", opt.h, "explicit observation step (overrides gamma)");
  simulate->add_option("--n", opt.n, "number of observation intervals");
  simulate->add_option("--x0", opt.x0,
                       "force the initial state (default: stationary draw)");
  estimate->add_option("--level", opt.level, "confidence level in (0,1), default 0.95");
  estimate->add_option("--tol", opt.tol, "optimizer interval tolerance");
  for (CLI::App* cmd : {estimate, sigma}) {
    cmd->add_option("--theta1-min", opt.t1min, "search rectangle: theta1 lower edge");
    cmd->add_option("--theta1-max", opt.t1max, "search rectangle: theta1 upper edge");
    cmd->add_option("--theta2-min", opt.t2min, "search rectangle: theta2 lower edge");
    cmd->add_option("--theta2-max", opt.t2max, "search rectangle: theta2 upper edge");
    cmd->add_option("--profile-g", opt.profile_g,
                    "dump the diffusion-stage profile as theta,value CSV");
    cmd->add_option("--profile-l", opt.profile_l,
                    "dump the drift-stage profile as theta,value CSV");
  }
  experiment->add_option("--n-list", opt.n_list, "comma-separated n values")
      ->delimiter(',');
  experiment->add_option("--replications", opt.replications, "replications per n");
  experiment->add_option("--jobs", opt.jobs, "worker threads for replications");
  experiment->add_option("--summary-output", opt.summary_output, "summary CSV path");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
    if (simulate->parsed()) return run_simulate(simulate, opt, out);
    if (censor->parsed()) return run_censor(censor, opt, out);
    if (estimate->parsed()) return run_estimate(estimate, opt, out);
    if (sigma->parsed()) return run_sigma(sigma, opt, out);
    if (experiment->parsed()) return run_experiment_cmd(experiment, opt, out, err);
    err << app.help();
    return 2;
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace hde::cli
