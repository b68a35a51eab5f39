#include "hde/mc.hpp"

#include <cmath>
#include <limits>
#include <ostream>

#include "hde/censor.hpp"
#include "hde/csv.hpp"
#include "hde/errors.hpp"
#include "hde/parallel.hpp"
#include "hde/simulate.hpp"
#include "hde/stats.hpp"

namespace hde {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

ReplicationRecord run_one(const DiffusionModel& model,
                          const std::optional<SigmaMatrix>& sigma_ref,
                          const ExperimentConfig& cfg, std::size_t n,
                          std::size_t rep_index) {
  ReplicationRecord rec;
  rec.n = n;
  rec.rep = rep_index;
  rec.seed = cfg.seed_base + rep_index;
  rec.theta1_hat = rec.theta2_hat = rec.se1 = rec.se2 = rec.z1 = rec.z2 = kNaN;
  try {
    const SamplingScheme scheme =
        scheme_from_rate(n, cfg.gamma, cfg.refine, cfg.alpha, rec.seed);
    const Trajectory traj = euler_maruyama_path(model, cfg.theta0, scheme);
    const PartialObservations obs = apply_threshold(traj, cfg.tau, cfg.alpha);
    rec.n_pairs = static_cast<long long>(usable_pairs(obs).size());
    if (rec.n_pairs < static_cast<long long>(kMinUsablePairs)) {
      rec.status = RepStatus::insufficient_pairs;
      return rec;
    }
    const EstimationResult est = two_stage_estimate(obs, model, cfg.rect, cfg.tol);
    rec.theta1_hat = est.theta_hat.theta1;
    rec.theta2_hat = est.theta_hat.theta2;
    rec.se1 = est.se1;
    rec.se2 = est.se2;
    if (sigma_ref && sigma_ref->nonsingular()) {
      const auto [z1, z2] =
          standardize_errors(est, cfg.theta0, *sigma_ref, n, scheme.h_n);
      rec.z1 = z1;
      rec.z2 = z2;
    }
    rec.status = RepStatus::ok;
  } catch (const SimulationBlowupError&) {
    rec.status = RepStatus::blowup;
  } catch (const InsufficientDataError&) {
    rec.status = RepStatus::insufficient_pairs;
  } catch (const NumericError&) {
    rec.status = RepStatus::numeric_error;
  }
  return rec;
}

std::optional<SigmaMatrix> reference_sigma(const DiffusionModel& model,
                                           const ExperimentConfig& cfg) {
  if (!model.has_invariant_density()) return std::nullopt;
  return sigma_quadrature(model, cfg.theta0, cfg.tau);
}

}  // namespace

std::string to_string(RepStatus status) {
  switch (status) {
    case RepStatus::ok: return "ok";
    case RepStatus::insufficient_pairs: return "insufficient_pairs";
    case RepStatus::blowup: return "blowup";
    case RepStatus::numeric_error: return "numeric_error";
  }
  return "unknown";
}

std::string to_csv_row(const ReplicationRecord& r) {
  const auto num = [](double x) { return std::isnan(x) ? std::string() : format_double(x); };
  std::string row = std::to_string(r.n) + ',' + std::to_string(r.rep) + ',' +
                    std::to_string(r.seed) + ',' + num(r.theta1_hat) + ',' +
                    num(r.theta2_hat) + ',' + num(r.se1) + ',' + num(r.se2) + ',' +
                    num(r.z1) + ',' + num(r.z2) + ',';
  if (r.n_pairs >= 0) row += std::to_string(r.n_pairs);
  row += ',' + to_string(r.status);
  return row;
}

ReplicationRecord run_replication(const ExperimentConfig& cfg, std::size_t n,
                                  std::size_t rep_index) {
  const DiffusionModel model = builtin_model(cfg.model_name);
  return run_one(model, reference_sigma(model, cfg), cfg, n, rep_index);
}

std::vector<ReplicationRecord> run_replications(const ExperimentConfig& cfg,
                                                std::size_t n, unsigned jobs) {
  const DiffusionModel model = builtin_model(cfg.model_name);
  const std::optional<SigmaMatrix> sigma_ref = reference_sigma(model, cfg);
  std::vector<ReplicationRecord> records(cfg.replications);
  parallel_for(cfg.replications, jobs, [&](std::size_t rep) {
    records[rep] = run_one(model, sigma_ref, cfg, n, rep);
  });
  return records;
}

SummaryRow summarize(const ExperimentConfig& cfg, std::size_t n,
                     const std::vector<ReplicationRecord>& records) {
  SummaryRow row;
  row.n = n;
  row.replications = records.size();

  std::vector<double> e1, e2, z1s, z2s;
  double pair_fraction_sum = 0.0;
  std::size_t covered1 = 0, covered2 = 0, coverage_count = 0, ok_count = 0;
  const double z_crit = normal_quantile(0.5 * (1.0 + cfg.ci_level));
  for (const ReplicationRecord& r : records) {
    if (r.status != RepStatus::ok) {
      ++row.failures;
      continue;
    }
    ++ok_count;
    e1.push_back(r.theta1_hat - cfg.theta0.theta1);
    e2.push_back(r.theta2_hat - cfg.theta0.theta2);
    pair_fraction_sum += static_cast<double>(r.n_pairs) / static_cast<double>(n);
    if (std::isfinite(r.se1) && std::isfinite(r.se2)) {
      ++coverage_count;
      if (std::fabs(r.theta1_hat - cfg.theta0.theta1) <= z_crit * r.se1) ++covered1;
      if (std::fabs(r.theta2_hat - cfg.theta0.theta2) <= z_crit * r.se2) ++covered2;
    }
    if (!std::isnan(r.z1) && !std::isnan(r.z2)) {
      z1s.push_back(r.z1);
      z2s.push_back(r.z2);
    }
  }

  const auto rmse = [](const std::vector<double>& errs) {
    double s = 0.0;
    for (double e : errs) s += e * e;
    return errs.empty() ? kNaN : std::sqrt(s / static_cast<double>(errs.size()));
  };
  row.bias1 = e1.empty() ? kNaN : mean(e1);
  row.bias2 = e2.empty() ? kNaN : mean(e2);
  row.rmse1 = rmse(e1);
  row.rmse2 = rmse(e2);
  row.coverage1 = coverage_count ? static_cast<double>(covered1) / coverage_count : kNaN;
  row.coverage2 = coverage_count ? static_cast<double>(covered2) / coverage_count : kNaN;
  row.mean_pair_fraction = ok_count ? pair_fraction_sum / ok_count : kNaN;
  row.dispersion_defined = ok_count >= 2;
  if (row.dispersion_defined && z1s.size() >= 2) {
    row.z1_skew = skewness(z1s);
    row.z1_exkurt = excess_kurtosis(z1s);
    row.z1_ks = ks_distance_normal(z1s);
    row.z2_skew = skewness(z2s);
    row.z2_exkurt = excess_kurtosis(z2s);
    row.z2_ks = ks_distance_normal(z2s);
    row.z_corr = pearson_correlation(z1s, z2s);
  } else {
    row.z1_skew = row.z1_exkurt = row.z1_ks = kNaN;
    row.z2_skew = row.z2_exkurt = row.z2_ks = kNaN;
    row.z_corr = kNaN;
  }
  return row;
}

ExperimentResult run_experiment(const ExperimentConfig& cfg, unsigned jobs,
                                std::ostream* records_csv, std::ostream* summary_csv) {
  if (cfg.replications < 1) throw Error("experiment needs replications >= 1");
  ExperimentResult result;
  for (std::size_t n : cfg.n_list) {
    std::vector<ReplicationRecord> records = run_replications(cfg, n, jobs);
    const SummaryRow row = summarize(cfg, n, records);
    if (static_cast<double>(row.failures) >
        0.2 * static_cast<double>(cfg.replications)) {
      throw ExperimentError("aborting: " + std::to_string(row.failures) + " of " +
                            std::to_string(cfg.replications) + " replications failed at n = " +
                            std::to_string(n) + " (over the 20% tolerance)");
    }
    result.summary.rows.push_back(row);
    result.records.insert(result.records.end(), records.begin(), records.end());
  }
  if (records_csv) write_records_csv(*records_csv, result.records);
  if (summary_csv) write_summary_csv(*summary_csv, result.summary);
  return result;
}

void write_records_csv(std::ostream& out, const std::vector<ReplicationRecord>& records) {
  out << "n,rep,seed,theta1_hat,theta2_hat,se1,se2,z1,z2,n_pairs,status\n";
  for (const ReplicationRecord& r : records) out << to_csv_row(r) << '\n';
}

void write_summary_csv(std::ostream& out, const ExperimentSummary& summary) {
  const auto num = [](double x) { return std::isnan(x) ? std::string("nan") : format_double(x); };
  out << "n,replications,failures,bias1,bias2,rmse1,rmse2,coverage1,coverage2,"
         "mean_pair_fraction,z1_skew,z1_exkurt,z1_ks,z2_skew,z2_exkurt,z2_ks,z_corr\n";
  for (const SummaryRow& r : summary.rows) {
    out << r.n << ',' << r.replications << ',' << r.failures << ',' << num(r.bias1)
        << ',' << num(r.bias2) << ',' << num(r.rmse1) << ',' << num(r.rmse2) << ','
        << num(r.coverage1) << ',' << num(r.coverage2) << ','
        << num(r.mean_pair_fraction) << ',' << num(r.z1_skew) << ','
        << num(r.z1_exkurt) << ',' << num(r.z1_ks) << ',' << num(r.z2_skew) << ','
        << num(r.z2_exkurt) << ',' << num(r.z2_ks) << ',' << num(r.z_corr) << '\n';
  }
}

}  // namespace hde
