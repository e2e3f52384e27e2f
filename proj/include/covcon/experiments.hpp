#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "covcon/generate.hpp"

namespace covcon {

struct ExperimentChecks {
  bool theorem1 = true;        // assert connectivity at factors >= the bound, and the margin bound
  bool lemma3 = false;         // randomized packing search stays <= 6
  bool redistribute = false;   // run the spacing repair and validate its output
  bool route_all_pairs = false;  // constructive routes between all sensor pairs
};

struct ExperimentConfig {
  GenSpec gen;  // template; the per-trial seed is derived from `seed` below
  int trials = 1;
  std::vector<double> rc_factors;  // evaluated as r_c = factor * r_s
  ExperimentChecks checks;
  std::uint64_t seed = 0;
  int packing_trials = 100000;          // used when checks.lemma3
  std::vector<double> tightness_grid;   // optional sub-bound probe factors
};

struct FactorResult {
  double rc_factor = 0.0;
  bool connected = false;
};

struct TrialRecord {
  int trial_id = 0;
  std::uint64_t seed = 0;
  int n_sensors = 0;
  bool covered = false;
  bool spacing_ok = false;
  bool region_valid = false;
  bool marginal = false;
  double margin = 0.0;  // bottleneck radius; NaN when n < 2
  std::vector<FactorResult> factors;
  // -1 when the corresponding check was not run.
  int redistribute_steps = -1;
  int max_additions = -1;
  int route_failures = -1;
};

struct FactorSummary {
  double rc_factor = 0.0;
  int hypothesis_trials = 0;
  int connected = 0;
};

struct ExperimentSummary {
  int trials = 0;
  int hypothesis_trials = 0;  // covered && spacing_ok && region_valid
  int filtered_out = 0;
  std::vector<FactorSummary> per_factor;
  double margin_min = 0.0;
  double margin_max = 0.0;
  double margin_mean = 0.0;
  std::vector<int> margin_histogram;  // bins of width r_s/20 over [0, 2*r_s]
  int max_additions = -1;
  int packing_max = -1;
  long route_pairs = 0;
  long route_failures = 0;
};

struct ExperimentResult {
  std::vector<TrialRecord> records;
  ExperimentSummary summary;
};

/// Runs the Monte Carlo suite. Trials execute in parallel chunks with
/// per-trial derived seeds; records are ordered by trial_id, so the output is
/// identical for any thread count.
///
/// Any trial satisfying the hypothesis (covered, spacing ok, region valid)
/// that is disconnected at a factor >= bound_constant(), exceeds the margin
/// bound, fails a constructive route, or needs more than 6 additions in a
/// redistribution step is a hard failure: the offending deployment is written
/// to reproducer_dir and a std::runtime_error names the file.
ExperimentResult run_experiment(const ExperimentConfig& cfg, const std::string& reproducer_dir,
                                int threads = 1);

struct ProbeFactorCount {
  double rc_factor = 0.0;
  int disconnected = 0;
};

struct ProbeResult {
  int trials = 0;
  int hypothesis_trials = 0;
  std::vector<ProbeFactorCount> counts;
  std::vector<std::string> reproducer_paths;
};

/// Searches hypothesis-satisfying deployments for disconnection below the
/// bound. Factors must all be strictly below bound_constant(). Found
/// deployments are written to out_dir; no assertion is made either way.
ProbeResult tightness_probe(const ExperimentConfig& cfg, const std::vector<double>& factor_grid,
                            const std::string& out_dir, int threads = 1);

/// CSV rendering of trial records, one row per trial x factor. Byte-stable:
/// fixed column order, %.17g floats, 0/1 booleans.
std::string records_to_csv(const std::vector<TrialRecord>& records);

}  // namespace covcon
