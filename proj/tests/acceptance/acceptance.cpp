// Acceptance suite: one pass/fail line per criterion, nonzero exit if any
// fails. Heavy Monte Carlo runs are shared across criteria, so the order of
// the printed lines is fixed but the work happens up front.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <limits>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "cli.hpp"
#include "hde/asymptotics.hpp"
#include "hde/censor.hpp"
#include "hde/csv.hpp"
#include "hde/estimate.hpp"
#include "hde/mc.hpp"
#include "hde/parallel.hpp"
#include "hde/simulate.hpp"
#include "hde/stats.hpp"
#include "support/oracles.hpp"

using namespace hde;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

int g_failures = 0;

class Timer {
 public:
  Timer() : start_(std::chrono::steady_clock::now()) {}
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

void report(int id, const std::string& name, bool pass, double seconds,
            const std::string& detail) {
  std::printf("[%s] criterion %d: %-28s (%6.1f s) %s\n", pass ? "PASS" : "FAIL", id,
              name.c_str(), seconds, detail.c_str());
  std::fflush(stdout);
  if (!pass) ++g_failures;
}

unsigned jobs() {
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 2 : hw;
}

std::string fmt(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.4g", x);
  return buf;
}

double median(std::vector<double> xs) {
  std::sort(xs.begin(), xs.end());
  const std::size_t m = xs.size();
  return m % 2 ? xs[m / 2] : 0.5 * (xs[m / 2 - 1] + xs[m / 2]);
}

// ---- criterion 1: Sigma oracle through the sigma subcommand ---------------

void criterion_sigma_oracle() {
  Timer timer;
  std::ostringstream out, err;
  const int code = cli::dispatch(
      {"sigma", "--model", "ou", "--theta1", "1", "--theta2", "1", "--tau", "0"}, out,
      err);
  bool pass = (code == 0);
  double s11 = 0, s22 = 0, inv11 = 0, inv22 = 0;
  if (pass) {
    const std::string text = out.str();
    const auto nl = text.find('\n');
    std::sscanf(text.c_str() + nl + 1, "%lf,%lf,%lf,%lf", &s11, &s22, &inv11, &inv22);
    const oracle::OuSigma closed = oracle::ou_sigma_closed_form(1.0, 1.0, 0.0);
    const auto rel = [](double a, double b) { return std::fabs(a - b) / std::fabs(b); };
    pass = rel(s11, 1.0) < 1e-6 && rel(s22, 0.25) < 1e-6 && rel(inv11, 1.0) < 1e-6 &&
           rel(inv22, 4.0) < 1e-6 && rel(s11, closed.s11) < 1e-6 &&
           rel(s22, closed.s22) < 1e-6;
  }
  const double elapsed = timer.seconds();
  pass = pass && elapsed < 1.0;
  report(1, "Sigma oracle", pass, elapsed,
         "s11=" + fmt(s11) + " s22=" + fmt(s22) + " inv=(" + fmt(inv11) + "," +
             fmt(inv22) + ")");
}

// ---- criterion 2: uncensored mode equals the classical estimator ----------

void criterion_degenerate_equivalence() {
  Timer timer;
  const DiffusionModel ou = builtin_model("ou");
  const ParamRectangle rect;
  const int datasets = 20;
  std::vector<double> gap(datasets);
  parallel_for(datasets, jobs(), [&](std::size_t k) {
    const SamplingScheme scheme = scheme_from_rate(5000, 0.6, 10, 0.25, 600 + k);
    const Trajectory traj = euler_maruyama_path(ou, ParamPoint{1.0, 1.0}, scheme);
    const PartialObservations unc = apply_threshold(traj, -kInf, 0.25);
    const EstimationResult fit = two_stage_estimate(unc, ou, rect, 1e-6);
    const oracle::ClassicalEstimate classical =
        oracle::classical_two_stage(traj.values, scheme.h_n, ou, rect, 1e-6);
    gap[k] = std::max(std::fabs(fit.theta_hat.theta1 - classical.theta1_hat),
                      std::fabs(fit.theta_hat.theta2 - classical.theta2_hat));
  });
  const double worst = *std::max_element(gap.begin(), gap.end());
  const double elapsed = timer.seconds();
  report(2, "degenerate equivalence", worst <= 1e-10 && elapsed < 10.0, elapsed,
         "max |pipeline - classical| = " + fmt(worst) + " over 20 seeds");
}

// ---- criteria 3-6 share one 500-replication study --------------------------

struct StudyOutputs {
  std::vector<ReplicationRecord> small;  // n = 12500
  std::vector<ReplicationRecord> large;  // n = 50000
};

StudyOutputs run_study() {
  ExperimentConfig cfg;
  cfg.model_name = "ou";
  cfg.theta0 = ParamPoint{1.0, 1.0};
  cfg.tau = 0.0;
  cfg.alpha = 0.25;
  cfg.gamma = 0.6;
  cfg.refine = 10;
  cfg.replications = 500;
  cfg.seed_base = 20250;
  cfg.ci_level = 0.95;
  cfg.tol = 1e-6;
  StudyOutputs study;
  study.small = run_replications(cfg, 12500, jobs());
  study.large = run_replications(cfg, 50000, jobs());
  return study;
}

void criterion_consistency(const StudyOutputs& study, double study_seconds) {
  double m1 = 0.0, m2 = 0.0;
  int used = 0;
  for (const ReplicationRecord& r : study.large) {
    if (r.rep >= 300) break;
    if (r.status != RepStatus::ok) continue;
    m1 += r.theta1_hat;
    m2 += r.theta2_hat;
    ++used;
  }
  m1 /= used;
  m2 /= used;
  const bool pass =
      used == 300 && std::fabs(m1 - 1.0) < 0.01 && std::fabs(m2 - 1.0) < 0.10;
  report(3, "consistency (300 reps)", pass, study_seconds,
         "mean theta1=" + fmt(m1) + " mean theta2=" + fmt(m2));
}

double rmse_over(const std::vector<ReplicationRecord>& records, std::size_t first_reps,
                 bool theta1) {
  double s = 0.0;
  int count = 0;
  for (const ReplicationRecord& r : records) {
    if (r.rep >= first_reps || r.status != RepStatus::ok) continue;
    const double e = (theta1 ? r.theta1_hat : r.theta2_hat) - 1.0;
    s += e * e;
    ++count;
  }
  return std::sqrt(s / count);
}

void criterion_rate_scaling(const StudyOutputs& study) {
  Timer timer;
  const double r1 =
      rmse_over(study.small, 300, true) / rmse_over(study.large, 300, true);
  const double r2 =
      rmse_over(study.small, 300, false) / rmse_over(study.large, 300, false);
  const bool pass = r1 >= 1.4 && r1 <= 2.6 && r2 >= 1.2 && r2 <= 2.2;
  report(4, "rate scaling", pass, timer.seconds(),
         "rmse ratio theta1=" + fmt(r1) + " (band [1.4,2.6]) theta2=" + fmt(r2) +
             " (band [1.2,2.2])");
}

void criterion_normality(const StudyOutputs& study) {
  Timer timer;
  std::vector<double> z1s, z2s;
  for (const ReplicationRecord& r : study.large) {
    if (r.status != RepStatus::ok || std::isnan(r.z1) || std::isnan(r.z2)) continue;
    z1s.push_back(r.z1);
    z2s.push_back(r.z2);
  }
  const double sk1 = skewness(z1s), ku1 = excess_kurtosis(z1s);
  const double ks1 = ks_distance_normal(z1s);
  const double sk2 = skewness(z2s), ku2 = excess_kurtosis(z2s);
  const double ks2 = ks_distance_normal(z2s);
  const double corr = pearson_correlation(z1s, z2s);
  const bool pass = z1s.size() >= 500 && std::fabs(sk1) < 0.3 && std::fabs(sk2) < 0.3 &&
                    std::fabs(ku1) < 0.6 && std::fabs(ku2) < 0.6 && ks1 < 0.08 &&
                    ks2 < 0.08 && std::fabs(corr) < 0.15;
  report(5, "asymptotic normality", pass, timer.seconds(),
         "skew=(" + fmt(sk1) + "," + fmt(sk2) + ") exkurt=(" + fmt(ku1) + "," +
             fmt(ku2) + ") ks=(" + fmt(ks1) + "," + fmt(ks2) + ") corr=" + fmt(corr));

  // Informational companion run at a five-fold longer effective horizon
  // (n = 4e5, gamma = 0.51, T ~ 556). The drift coordinate converges on the
  // slow sqrt(nh) scale: its finite-T sampling bias (~2 theta2 T_eff^-1, the
  // amount the consistency band deliberately allows) and skewness shrink
  // with T, not with n alone, so the CLT shape shows up here.
  Timer diag_timer;
  ExperimentConfig cfg;
  cfg.model_name = "ou";
  cfg.theta0 = ParamPoint{1.0, 1.0};
  cfg.tau = 0.0;
  cfg.alpha = 0.25;
  cfg.gamma = 0.51;
  cfg.refine = 10;
  cfg.replications = 250;
  cfg.seed_base = 77000;
  cfg.tol = 1e-6;
  const std::vector<ReplicationRecord> long_run = run_replications(cfg, 400000, jobs());
  std::vector<double> z2_long;
  for (const ReplicationRecord& r : long_run) {
    if (r.status == RepStatus::ok && !std::isnan(r.z2)) z2_long.push_back(r.z2);
  }
  std::printf(
      "       diagnostic: z2 skew %s -> %s, ks %s -> %s as T grows 76 -> 556 "
      "(%.1f s, 250 reps)\n",
      fmt(sk2).c_str(), fmt(skewness(z2_long)).c_str(), fmt(ks2).c_str(),
      fmt(ks_distance_normal(z2_long)).c_str(), diag_timer.seconds());
  std::fflush(stdout);
}

void criterion_coverage(const StudyOutputs& study) {
  Timer timer;
  const double z95 = normal_quantile(0.975);
  int covered1 = 0, covered2 = 0, total = 0;
  for (const ReplicationRecord& r : study.large) {
    if (r.status != RepStatus::ok || !std::isfinite(r.se1)) continue;
    ++total;
    covered1 += std::fabs(r.theta1_hat - 1.0) <= z95 * r.se1;
    covered2 += std::fabs(r.theta2_hat - 1.0) <= z95 * r.se2;
  }
  const double c1 = static_cast<double>(covered1) / total;
  const double c2 = static_cast<double>(covered2) / total;
  const bool pass =
      total >= 300 && c1 >= 0.90 && c1 <= 0.99 && c2 >= 0.90 && c2 <= 0.99;
  report(6, "CI coverage", pass, timer.seconds(),
         "coverage theta1=" + fmt(c1) + " theta2=" + fmt(c2) + " over " +
             std::to_string(total) + " reps");
}

// ---- criterion 7: censored-pair decay --------------------------------------

void criterion_pair_decay() {
  Timer timer;
  // alpha = 0.45: the drop event {X_{i-1} > tau', X_i <= tau} has observable
  // probability at these n (at smaller alpha it needs a > 3.5 sd jump of the
  // increment and the per-path medians are all zero).
  const DiffusionModel ou = builtin_model("ou");
  const ParamPoint theta0{1.0, 1.0};
  const double alpha = 0.45;
  const int seeds = 200;
  std::vector<double> medians;
  for (std::size_t n : {5000u, 20000u, 80000u}) {
    std::vector<double> fractions(seeds);
    parallel_for(seeds, jobs(), [&](std::size_t s) {
      const SamplingScheme scheme = scheme_from_rate(n, 0.6, 10, alpha, 3000 + s);
      const Trajectory traj = euler_maruyama_path(ou, theta0, scheme);
      const ThresholdSpec spec = effective_threshold(0.0, scheme.h_n, alpha);
      std::size_t dropped = 0;
      for (std::size_t i = 1; i < traj.values.size(); ++i) {
        if (traj.values[i - 1] > spec.tau_prime && traj.values[i] <= spec.tau) {
          ++dropped;
        }
      }
      fractions[s] = static_cast<double>(dropped) / static_cast<double>(n);
    });
    medians.push_back(median(fractions));
  }
  const bool pass = medians[0] > medians[1] && medians[1] > medians[2];
  report(7, "censored-pair decay", pass, timer.seconds(),
         "median drop fraction " + fmt(medians[0]) + " > " + fmt(medians[1]) + " > " +
             fmt(medians[2]));
}

// ---- criterion 8: bit-identical experiment CSV across runs and jobs -------

void criterion_reproducibility() {
  Timer timer;
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "hde_acceptance_c8";
  fs::create_directories(dir);
  const std::string cfg_path = (dir / "exp.cfg").string();
  {
    std::ofstream cfg(cfg_path);
    cfg << "model = ou\ntheta1 = 1\ntheta2 = 1\ntau = 0\nalpha = 0.25\n"
           "gamma = 0.6\nn_list = 2000\nreplications = 50\nseed = 99\nrefine = 10\n";
  }
  const auto run_once = [&](const std::string& tag, const std::string& jobs_flag) {
    const std::string records = (dir / ("runs_" + tag + ".csv")).string();
    const std::string summary = (dir / ("summary_" + tag + ".csv")).string();
    std::ostringstream out, err;
    const int code =
        cli::dispatch({"experiment", "--config", cfg_path, "--jobs", jobs_flag,
                       "--output", records, "--summary-output", summary},
                      out, err);
    std::ifstream in(records);
    std::ostringstream buf;
    buf << in.rdbuf();
    return std::make_pair(code, buf.str());
  };
  const auto [code_a, text_a] = run_once("a", "1");
  const auto [code_b, text_b] = run_once("b", "4");
  const auto [code_c, text_c] = run_once("c", "1");
  const bool pass = code_a == 0 && code_b == 0 && code_c == 0 && !text_a.empty() &&
                    text_a == text_b && text_a == text_c;
  fs::remove_all(dir);
  report(8, "reproducible experiment CSV", pass, timer.seconds(),
         "records identical across --jobs 1/4 and reruns (" +
             std::to_string(text_a.size()) + " bytes)");
}

}  // namespace

int main() {
  std::printf("acceptance suite: ou(1,1), tau = 0, alpha = 0.25, gamma = 0.6\n");
  criterion_sigma_oracle();
  criterion_degenerate_equivalence();

  Timer study_timer;
  const StudyOutputs study = run_study();
  criterion_consistency(study, study_timer.seconds());
  criterion_rate_scaling(study);
  criterion_normality(study);
  criterion_coverage(study);

  criterion_pair_decay();
  criterion_reproducibility();

  if (g_failures == 0) {
    std::printf("ACCEPTANCE: all 8 criteria passed\n");
    return 0;
  }
  std::printf("ACCEPTANCE: %d criterion(s) FAILED\n", g_failures);
  return 1;
}
