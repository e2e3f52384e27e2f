#include "covcon/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <mutex>
#include <sstream>

#include "covcon/commgraph.hpp"
#include "covcon/io.hpp"
#include "covcon/parallel.hpp"
#include "covcon/redistribute.hpp"
#include "covcon/rng.hpp"
#include "covcon/routing.hpp"

namespace covcon {

namespace {

void validate_config(const ExperimentConfig& cfg) {
  if (cfg.trials < 1) throw std::invalid_argument("experiment: trials must be >= 1");
  if (cfg.rc_factors.empty()) throw std::invalid_argument("experiment: rc_factors must be nonempty");
  for (double f : cfg.rc_factors) {
    if (!(f > 0.0)) throw std::invalid_argument("experiment: rc_factors must be positive");
  }
}

std::string bool01(bool b) { return b ? "1" : "0"; }

struct TrialOutcome {
  TrialRecord record;
  std::string violation;  // empty = fine
};

TrialOutcome run_trial(const ExperimentConfig& cfg, int trial, const std::string& reproducer_dir) {
  TrialOutcome out;
  TrialRecord& rec = out.record;
  rec.trial_id = trial;
  rec.seed = stream_seed(cfg.seed, static_cast<std::uint64_t>(trial));

  GenSpec gs = cfg.gen;
  gs.seed = rec.seed;
  const Deployment dep = generate(gs);

  rec.n_sensors = dep.size();
  const CoverageReport cov = check_coverage(dep);
  rec.covered = cov.covered;
  rec.marginal = cov.marginal;
  rec.spacing_ok = check_spacing(dep).ok;
  rec.region_valid = dep.region_valid();
  rec.margin = dep.size() >= 2 ? connectivity_margin(dep)
                               : std::numeric_limits<double>::quiet_NaN();
  for (double f : cfg.rc_factors) {
    const CommGraph g = build_graph_with_range(dep, f * dep.r_s);
    rec.factors.push_back({f, is_connected(g)});
  }

  const bool hypothesis = rec.covered && rec.spacing_ok && rec.region_valid;
  auto report_violation = [&](const std::string& what) {
    if (!out.violation.empty()) return;
    std::string msg = "trial " + std::to_string(trial) + ": " + what;
    if (!reproducer_dir.empty()) {
      const std::string path =
          reproducer_dir + "/reproducer_trial" + std::to_string(trial) + ".json";
      io::write_deployment_file(path, dep);
      msg += " (reproducer: " + path + ")";
    }
    out.violation = msg;
  };

  if (cfg.checks.theorem1 && hypothesis) {
    const double bound = bound_constant();
    for (const FactorResult& fr : rec.factors) {
      if (fr.rc_factor >= bound && !fr.connected) {
        report_violation("disconnected at rc_factor " + io::format_double(fr.rc_factor) +
                         " despite covered+spacing+valid hypothesis");
      }
    }
    if (!(rec.margin < bound * dep.r_s + dep.tau())) {
      report_violation("connectivity margin " + io::format_double(rec.margin) +
                       " reaches bound_constant()*r_s");
    }
  }

  if (cfg.checks.redistribute && rec.covered && rec.region_valid) {
    try {
      const RedistributionResult rr = redistribute(dep);
      rec.redistribute_steps = static_cast<int>(rr.steps.size());
      rec.max_additions = 0;
      for (const RedistributionStep& s : rr.steps) {
        rec.max_additions = std::max(rec.max_additions, static_cast<int>(s.added.size()));
      }
      if (!check_spacing(rr.final).ok || !check_coverage(rr.final).covered) {
        report_violation("redistributed deployment fails spacing or coverage");
      }
    } catch (const std::runtime_error& e) {
      report_violation(std::string("redistribute failed: ") + e.what());
    }
  }

  if (cfg.checks.route_all_pairs && hypothesis && dep.size() >= 2) {
    Deployment routed = dep;
    routed.r_c = bound_constant() * dep.r_s;
    rec.route_failures = 0;
    for (int u = 0; u < routed.size() && rec.route_failures == 0; ++u) {
      for (int v = 0; v < routed.size(); ++v) {
        if (u == v) continue;
        try {
          (void)build_route(u, v, routed);
        } catch (const FalsificationError& e) {
          ++rec.route_failures;
          report_violation(std::string("route ") + std::to_string(u) + "->" + std::to_string(v) +
                           ": " + e.what());
          break;
        }
      }
    }
  }

  return out;
}

}  // namespace

ExperimentResult run_experiment(const ExperimentConfig& cfg, const std::string& reproducer_dir,
                                int threads) {
  validate_config(cfg);
  ExperimentResult result;
  result.records.resize(static_cast<std::size_t>(cfg.trials));
  std::vector<std::string> violations(static_cast<std::size_t>(cfg.trials));

  parallel_chunks(cfg.trials, threads, [&](int begin, int end) {
    for (int t = begin; t < end; ++t) {
      TrialOutcome out = run_trial(cfg, t, reproducer_dir);
      result.records[static_cast<std::size_t>(t)] = std::move(out.record);
      violations[static_cast<std::size_t>(t)] = std::move(out.violation);
    }
  });

  // Summary over hypothesis-satisfying trials.
  ExperimentSummary& s = result.summary;
  s.trials = cfg.trials;
  s.per_factor.resize(cfg.rc_factors.size());
  for (std::size_t f = 0; f < cfg.rc_factors.size(); ++f) {
    s.per_factor[f].rc_factor = cfg.rc_factors[f];
  }
  const double r_s = cfg.gen.r_s;
  const int bins = 40;
  s.margin_histogram.assign(bins, 0);
  double margin_sum = 0.0;
  int margin_count = 0;
  s.margin_min = std::numeric_limits<double>::infinity();
  s.margin_max = 0.0;
  for (const TrialRecord& rec : result.records) {
    const bool hyp = rec.covered && rec.spacing_ok && rec.region_valid;
    if (!hyp) continue;
    ++s.hypothesis_trials;
    for (std::size_t f = 0; f < rec.factors.size(); ++f) {
      ++s.per_factor[f].hypothesis_trials;
      if (rec.factors[f].connected) ++s.per_factor[f].connected;
    }
    if (std::isfinite(rec.margin)) {
      margin_sum += rec.margin;
      ++margin_count;
      s.margin_min = std::min(s.margin_min, rec.margin);
      s.margin_max = std::max(s.margin_max, rec.margin);
      int bin = static_cast<int>(rec.margin / (2.0 * r_s) * bins);
      bin = std::clamp(bin, 0, bins - 1);
      ++s.margin_histogram[static_cast<std::size_t>(bin)];
    }
    s.max_additions = std::max(s.max_additions, rec.max_additions);
    if (rec.route_failures >= 0) {
      s.route_pairs += static_cast<long>(rec.n_sensors) * (rec.n_sensors - 1);
      s.route_failures += rec.route_failures;
    }
  }
  s.filtered_out = s.trials - s.hypothesis_trials;
  s.margin_mean = margin_count > 0 ? margin_sum / margin_count : 0.0;
  if (!std::isfinite(s.margin_min)) s.margin_min = 0.0;

  if (cfg.checks.lemma3) {
    s.packing_max =
        max_packing_in_disk(r_s, cfg.packing_trials, stream_seed(cfg.seed, 0x9ACCull));
    if (s.packing_max > 6) {
      throw std::runtime_error("experiment: packing search exceeded 6 points in a disk");
    }
  }

  for (const std::string& v : violations) {
    if (!v.empty()) throw std::runtime_error("experiment: " + v);
  }
  return result;
}

ProbeResult tightness_probe(const ExperimentConfig& cfg, const std::vector<double>& factor_grid,
                            const std::string& out_dir, int threads) {
  validate_config(cfg);
  const double bound = bound_constant();
  for (double f : factor_grid) {
    if (!(f > 0.0) || f >= bound) {
      throw std::invalid_argument(
          "tightness_probe: factors must lie strictly below bound_constant()");
    }
  }

  ProbeResult probe;
  probe.trials = cfg.trials;
  probe.counts.resize(factor_grid.size());
  for (std::size_t f = 0; f < factor_grid.size(); ++f) probe.counts[f].rc_factor = factor_grid[f];

  struct TrialProbe {
    bool hypothesis = false;
    std::vector<char> disconnected;  // per factor
  };
  std::vector<TrialProbe> per_trial(static_cast<std::size_t>(cfg.trials));

  parallel_chunks(cfg.trials, threads, [&](int begin, int end) {
    for (int t = begin; t < end; ++t) {
      GenSpec gs = cfg.gen;
      gs.seed = stream_seed(cfg.seed, static_cast<std::uint64_t>(t));
      const Deployment dep = generate(gs);
      TrialProbe& tp = per_trial[static_cast<std::size_t>(t)];
      tp.disconnected.assign(factor_grid.size(), 0);
      tp.hypothesis =
          dep.region_valid() && check_spacing(dep).ok && check_coverage(dep).covered;
      if (!tp.hypothesis) continue;
      for (std::size_t f = 0; f < factor_grid.size(); ++f) {
        const double rc = factor_grid[f] * dep.r_s;
        if (!is_connected(build_graph_with_range(dep, rc))) {
          tp.disconnected[f] = 1;
          if (!out_dir.empty()) {
            Deployment repro = dep;
            repro.r_c = rc;
            const std::string path = out_dir + "/probe_f" + std::to_string(f) + "_trial" +
                                     std::to_string(t) + ".json";
            io::write_deployment_file(path, repro);
          }
        }
      }
    }
  });

  for (int t = 0; t < cfg.trials; ++t) {
    const TrialProbe& tp = per_trial[static_cast<std::size_t>(t)];
    if (!tp.hypothesis) continue;
    ++probe.hypothesis_trials;
    for (std::size_t f = 0; f < factor_grid.size(); ++f) {
      if (tp.disconnected[f]) {
        ++probe.counts[f].disconnected;
        probe.reproducer_paths.push_back("probe_f" + std::to_string(f) + "_trial" +
                                         std::to_string(t) + ".json");
      }
    }
  }
  return probe;
}

std::string records_to_csv(const std::vector<TrialRecord>& records) {
  std::ostringstream os;
  os << "trial_id,seed,n_sensors,covered,spacing_ok,region_valid,marginal,rc_factor,connected,"
        "margin,redistribute_steps,max_additions,route_failures\n";
  for (const TrialRecord& r : records) {
    for (const FactorResult& f : r.factors) {
      os << r.trial_id << ',' << r.seed << ',' << r.n_sensors << ',' << bool01(r.covered) << ','
         << bool01(r.spacing_ok) << ',' << bool01(r.region_valid) << ',' << bool01(r.marginal)
         << ',' << io::format_double(f.rc_factor) << ',' << bool01(f.connected) << ','
         << io::format_double(r.margin) << ',' << r.redistribute_steps << ',' << r.max_additions
         << ',' << r.route_failures << '\n';
    }
  }
  return os.str();
}

}  // namespace covcon
