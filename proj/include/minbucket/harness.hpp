#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "minbucket/bounds.hpp"
#include "minbucket/degrees.hpp"
#include "minbucket/enumerate.hpp"
#include "minbucket/rng.hpp"

namespace minbucket {

enum class CapRule {
  kSqrtN,          // floor(sqrt(n))
  kSqrtNOverLog2,  // floor(sqrt(n) / ln(n)^2), at least 1
  kFixed,          // a constant cap
};

struct CapSpec {
  CapRule rule = CapRule::kSqrtN;
  Degree fixed = 0;

  /// Cap for n vertices, clamped to [1, n - 1].
  Degree apply(std::uint64_t n) const;
};

enum class DegreeModel {
  kIid,                    // i.i.d. draws from the truncated power law
  kDeterministicPowerLaw,  // inverse-CDF quantile sequence
};

struct ExperimentConfig {
  double alpha = 2.4;
  std::vector<std::uint64_t> n_values{10'000, 100'000, 1'000'000};
  unsigned trials = 10;
  CapSpec cap;
  TieMode tie_mode = TieMode::kConsistent;
  DegreeModel degree_model = DegreeModel::kIid;
  /// Bucket by target degrees d_v instead of realized D_v.
  bool bucket_by_target = false;
  /// Draw one degree sequence per n and reuse it for every trial.
  bool fixed_sequence = false;
  Seed master_seed = 1;
  unsigned workers = 1;
  /// Also run the trivial algorithm and both tie modes on every graph and keep
  /// the instrumented counters for cross-checking.
  bool verify_identities = false;
  /// Abort before an n whose estimated footprint exceeds this; 0 disables.
  std::uint64_t memory_limit_bytes = 0;

  /// Throws ParameterError on an invalid configuration.
  void validate() const;
};

/// Instrumented counters collected when verify_identities is set.
struct IdentityCheck {
  std::uint64_t bucket_formula = 0;     // sum_v C(X_v, 2) for the configured tie mode
  std::uint64_t trivial_counter = 0;    // trivial_enumerate's wedge counter
  std::uint64_t consistent_work = 0;
  std::uint64_t both_work = 0;
  std::uint64_t triangles = 0;
};

struct TrialRecord {
  std::uint64_t n = 0;
  unsigned trial = 0;
  Seed seed = 0;
  std::uint64_t work = 0;          // MinBucket wedges_enumerated
  std::uint64_t trivial_work = 0;  // sum_v C(D_v, 2)
  std::uint64_t edges = 0;
  double mean_degree = 0.0;        // realized 2|E| / n
  std::optional<IdentityCheck> check;
};

struct SizeSummary {
  std::uint64_t n = 0;
  unsigned trials = 0;
  double mean_work = 0.0;
  double stddev_work = 0.0;  // sample standard deviation (n - 1 denominator)
  double mean_ratio = 0.0;   // mean_work / n
  double stddev_ratio = 0.0;
  std::optional<double> reference_cn;  // C n when the limit constant is finite
};

struct ExperimentResult {
  ExperimentConfig config;
  std::vector<TrialRecord> trials;  // (n, trial) order
  std::vector<SizeSummary> sizes;
  std::optional<double> limit_constant;
  bool complete = true;
  std::string abort_reason;
};

/// Seed of trial t at size n: a pure function of (master, n, t).
Seed trial_seed(Seed master, std::uint64_t n, unsigned trial);

/// Rough peak bytes of one trial at size n.
std::uint64_t estimate_trial_bytes(const ExperimentConfig& cfg, std::uint64_t n);

using ProgressFn = std::function<void(const SizeSummary&)>;

/// Runs every (n, trial) and aggregates. Output is independent of cfg.workers.
/// When the memory guard trips, returns the completed sizes with complete = false.
ExperimentResult run_experiment(const ExperimentConfig& cfg, const ProgressFn& progress = {});

/// Recomputes per-size aggregates from the trial records.
std::vector<SizeSummary> summarize(const std::vector<TrialRecord>& trials, std::optional<double> limit_constant);

/// n,alpha,trial,work,trivial_work,edges,ratio
std::string format_csv(const ExperimentResult& result);
/// n,mean_ratio,stddev,reference_Cn
std::string format_plot_data(const ExperimentResult& result);
void emit_csv(const ExperimentResult& result, const std::filesystem::path& path);
void emit_plot_data(const ExperimentResult& result, const std::filesystem::path& path);

struct ComparisonRow {
  std::uint64_t n = 0;
  double mean_work = 0.0;
  double work_ratio = 0.0;            // mean_work / n
  std::optional<double> predicted;    // C n
  std::optional<double> ratio;        // mean_work / (C n)
};

/// Empirical mean work against C n. The report's alpha must match the
/// experiment's; a report built from a concrete sequence must have n among the
/// experiment's sizes. Mismatches raise UsageError.
std::vector<ComparisonRow> compare_bounds(const ExperimentResult& result, const BoundReport& report);

/// Experiment config plus output destinations, settable from key=value text.
struct ExperimentSettings {
  ExperimentConfig config;
  std::optional<std::filesystem::path> csv;
  std::optional<std::filesystem::path> plot_data;
};

/// Keys match the long CLI flags without dashes: alpha, n-list, trials, tie,
/// cap, seed, workers, csv, plot-data, degree-model, fixed-sequence,
/// bucket-degrees, verify, memory-limit-mb.
void apply_setting(ExperimentSettings& settings, std::string_view key, std::string_view value);
/// Flat key=value lines; '#' starts a comment line.
void read_settings_file(const std::filesystem::path& path, ExperimentSettings& settings);

std::vector<std::uint64_t> parse_n_list(std::string_view text);
CapSpec parse_cap(std::string_view text);
TieMode parse_tie_mode(std::string_view text);

/// MINBUCKET_WORKERS when set to a positive integer, else 1.
unsigned default_worker_count();

}  // namespace minbucket
