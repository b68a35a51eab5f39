#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "hde/asymptotics.hpp"
#include "hde/estimate.hpp"
#include "hde/model.hpp"

namespace hde {

/// One Monte Carlo study: the simulate -> censor -> estimate pipeline over
/// `replications` seeds for every n in n_list, with h = n^-gamma.
struct ExperimentConfig {
  std::string model_name = "ou";
  ParamPoint theta0{1.0, 1.0};
  ParamRectangle rect;
  double tau = 0.0;
  double alpha = 0.25;
  std::vector<std::size_t> n_list{10000};
  double gamma = 0.6;
  std::size_t refine = 10;
  std::size_t replications = 100;
  std::uint64_t seed_base = 0;
  double ci_level = 0.95;
  double tol = 1e-6;
};

enum class RepStatus { ok, insufficient_pairs, blowup, numeric_error };

std::string to_string(RepStatus status);

/// One replication's outcome. Numeric fields are NaN when the status or a
/// missing reference Sigma leaves them undefined; n_pairs is -1 when the
/// pipeline failed before censoring.
struct ReplicationRecord {
  std::size_t n = 0;
  std::size_t rep = 0;
  std::uint64_t seed = 0;
  RepStatus status = RepStatus::ok;
  double theta1_hat = 0.0;
  double theta2_hat = 0.0;
  double se1 = 0.0;
  double se2 = 0.0;
  double z1 = 0.0;
  double z2 = 0.0;
  long long n_pairs = -1;
};

/// CSV row exactly as written by write_records_csv (used for bit-level
/// determinism checks; NaN fields serialize empty).
std::string to_csv_row(const ReplicationRecord& record);

/// Per-n aggregate of the study.
struct SummaryRow {
  std::size_t n = 0;
  std::size_t replications = 0;
  std::size_t failures = 0;
  double bias1 = 0.0, bias2 = 0.0;
  double rmse1 = 0.0, rmse2 = 0.0;
  double coverage1 = 0.0, coverage2 = 0.0;
  double mean_pair_fraction = 0.0;
  double z1_skew = 0.0, z1_exkurt = 0.0, z1_ks = 0.0;
  double z2_skew = 0.0, z2_exkurt = 0.0, z2_ks = 0.0;
  double z_corr = 0.0;
  bool dispersion_defined = false;  // false with < 2 successful replications
};

struct ExperimentSummary {
  std::vector<SummaryRow> rows;
};

struct ExperimentResult {
  ExperimentSummary summary;
  std::vector<ReplicationRecord> records;
};

/// Full pipeline for replication `rep_index` at sample size n, seeded
/// seed_base + rep_index. Failures (too few pairs, blow-up) come back as
/// records, not exceptions. z-scores standardize against the quadrature
/// Sigma at the true parameter when the model has a stationary density.
ReplicationRecord run_replication(const ExperimentConfig& cfg, std::size_t n,
                                  std::size_t rep_index);

/// All replications at one n, farmed over `jobs` workers. Records are
/// indexed by replication, so the output is schedule-independent.
std::vector<ReplicationRecord> run_replications(const ExperimentConfig& cfg,
                                                std::size_t n, unsigned jobs);

/// Aggregates one n's records (single-threaded fold in replication order).
SummaryRow summarize(const ExperimentConfig& cfg, std::size_t n,
                     const std::vector<ReplicationRecord>& records);

/// Maps run_replications over n_list, aggregates, and (when streams are
/// given) writes the per-replication CSV and the summary CSV. Throws
/// ExperimentError when failures exceed 20% at any n.
ExperimentResult run_experiment(const ExperimentConfig& cfg, unsigned jobs,
                                std::ostream* records_csv = nullptr,
                                std::ostream* summary_csv = nullptr);

void write_records_csv(std::ostream& out, const std::vector<ReplicationRecord>& records);
void write_summary_csv(std::ostream& out, const ExperimentSummary& summary);

}  // namespace hde
