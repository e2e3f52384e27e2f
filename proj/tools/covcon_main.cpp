#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "covcon/commgraph.hpp"
#include "covcon/coverage.hpp"
#include "covcon/experiments.hpp"
#include "covcon/generate.hpp"
#include "covcon/io.hpp"
#include "covcon/redistribute.hpp"
#include "covcon/routing.hpp"

namespace {

using namespace covcon;

Deployment load_with_tolerance(const std::string& path, std::optional<double> tol_override) {
  Deployment d = io::load_deployment_file(path);
  if (tol_override) {
    d = make_deployment(std::move(d.sensors), d.r_s, d.r_c, d.region, tol_override);
  }
  return d;
}

std::string point_str(const Point& p) {
  return "(" + io::format_double(p.x) + ", " + io::format_double(p.y) + ")";
}

int cmd_check(const std::string& file, std::optional<double> tol, double oracle_step,
              int threads) {
  const Deployment d = load_with_tolerance(file, tol);
  bool all_ok = true;

  std::cout << "region: " << io::format_double(d.region.a) << " x "
            << io::format_double(d.region.b)
            << (d.region_valid() ? " (valid for r_s)" : " (SMALLER than r_s: region invalid)")
            << "\n";
  std::cout << "sensors: " << d.size() << "\n";

  const CoverageReport cov = check_coverage(d);
  std::cout << "coverage: " << (cov.covered ? "covered" : "uncovered");
  if (cov.witness) std::cout << ", witness " << point_str(*cov.witness);
  if (cov.marginal) std::cout << " [marginal: verdict within tolerance band]";
  std::cout << "\n";
  all_ok = all_ok && cov.covered;

  const SpacingReport spacing = check_spacing(d);
  if (spacing.ok) {
    std::cout << "spacing: ok (all pairs >= r_s)\n";
  } else {
    std::cout << "spacing: " << spacing.violating_pairs.size() << " violating pair(s)\n";
    const std::size_t shown = std::min<std::size_t>(spacing.violating_pairs.size(), 10);
    for (std::size_t k = 0; k < shown; ++k) {
      const SpacingViolation& v = spacing.violating_pairs[k];
      std::cout << "  pair (" << v.i << ", " << v.j << ") at distance "
                << io::format_double(v.distance) << "\n";
    }
    if (shown < spacing.violating_pairs.size()) {
      std::cout << "  ... " << (spacing.violating_pairs.size() - shown) << " more\n";
    }
  }
  all_ok = all_ok && spacing.ok;

  const bool connected = is_connected(build_graph(d));
  std::cout << "connectivity at r_c = " << io::format_double(d.r_c) << ": "
            << (connected ? "connected" : "disconnected") << "\n";
  all_ok = all_ok && connected;

  if (d.size() >= 2) {
    const double margin = connectivity_margin(d);
    std::cout << "connectivity margin (MST bottleneck): " << io::format_double(margin) << " = "
              << io::format_double(margin / d.r_s) << " * r_s\n";
  } else {
    std::cout << "connectivity margin: n/a (fewer than 2 sensors)\n";
  }

  const double bound_rc = bound_constant() * d.r_s;
  std::cout << "r_c >= sqrt(2+sqrt(3))*r_s: " << (d.r_c >= bound_rc ? "yes" : "no")
            << " (threshold " << io::format_double(bound_rc) << ")\n";

  if (oracle_step > 0.0) {
    const CoverageReport oracle = sample_coverage_oracle(d, oracle_step, threads);
    const bool agree = oracle.covered == cov.covered;
    std::cout << "oracle (step " << io::format_double(oracle_step) << "): "
              << (oracle.covered ? "covered" : "uncovered")
              << (agree ? ", agrees with exact checker" : ", DISAGREES with exact checker");
    if (!agree && cov.marginal) std::cout << " [marginal run]";
    std::cout << "\n";
    all_ok = all_ok && (agree || cov.marginal);
  }

  return all_ok ? 0 : 1;
}

int cmd_redistribute(const std::string& file, const std::string& out,
                     std::optional<double> tol) {
  const Deployment d = load_with_tolerance(file, tol);
  if (!d.region_valid()) {
    std::cerr << "error: region is smaller than the sensing range\n";
    return 1;
  }
  if (!check_coverage(d).covered) {
    std::cerr << "error: input deployment does not cover the region\n";
    return 1;
  }
  const RedistributionResult result = redistribute(d);
  io::write_deployment_file(out, result.final);
  io::write_text_file(out + ".steps.json", io::redistribution_to_string(result));
  std::cout << "iterations: " << result.iterations << "\n";
  int max_added = 0;
  for (const RedistributionStep& s : result.steps) {
    max_added = std::max(max_added, static_cast<int>(s.added.size()));
  }
  std::cout << "max additions in one step: " << max_added << "\n";
  std::cout << "final sensors: " << result.final.size() << " (written to " << out << ")\n";
  return 0;
}

int cmd_route(const std::string& file, int from, int to, std::optional<double> tol,
              const std::string& reproducer) {
  const Deployment d = load_with_tolerance(file, tol);
  if (from < 0 || from >= d.size() || to < 0 || to >= d.size()) {
    std::cerr << "error: sensor ids must be in [0, " << d.size() - 1 << "]\n";
    return 2;
  }
  if (!d.region_valid()) {
    std::cerr << "error: region is smaller than the sensing range\n";
    return 1;
  }
  if (d.r_c < bound_constant() * d.r_s - d.tau()) {
    std::cerr << "error: r_c is below sqrt(2+sqrt(3))*r_s; no route guarantee\n";
    return 1;
  }
  if (!check_coverage(d).covered) {
    std::cerr << "error: deployment does not cover the region\n";
    return 1;
  }
  if (!check_spacing(d).ok) {
    std::cerr << "error: deployment violates the minimum spacing constraint\n";
    return 1;
  }
  try {
    const RouteTrace trace = build_route(from, to, d);
    std::cout << io::route_trace_to_string(trace);
    return 0;
  } catch (const FalsificationError& e) {
    io::write_deployment_file(reproducer, e.deployment());
    std::cerr << "falsification: " << e.what() << "\n";
    std::cerr << "offending deployment written to " << reproducer << "\n";
    return 1;
  }
}

int cmd_experiment(const std::string& config_file, const std::string& out_dir, int threads) {
  const ExperimentConfig cfg = io::load_experiment_config_file(config_file);
  std::filesystem::create_directories(out_dir);
  try {
    const ExperimentResult result = run_experiment(cfg, out_dir, threads);
    io::write_text_file(out_dir + "/results.csv", records_to_csv(result.records));
    io::write_text_file(out_dir + "/summary.json", io::summary_to_string(result.summary));
    std::cout << "trials: " << result.summary.trials
              << ", hypothesis-satisfying: " << result.summary.hypothesis_trials << "\n";
    for (const FactorSummary& f : result.summary.per_factor) {
      std::cout << "  rc_factor " << io::format_double(f.rc_factor) << ": " << f.connected << "/"
                << f.hypothesis_trials << " connected\n";
    }
    if (!cfg.tightness_grid.empty()) {
      const ProbeResult probe = tightness_probe(cfg, cfg.tightness_grid, out_dir, threads);
      io::write_text_file(out_dir + "/probe.json", io::probe_to_string(probe));
      for (const ProbeFactorCount& c : probe.counts) {
        std::cout << "  probe factor " << io::format_double(c.rc_factor) << ": "
                  << c.disconnected << " disconnected\n";
      }
    }
    std::cout << "results written to " << out_dir << "\n";
    return 0;
  } catch (const std::runtime_error& e) {
    std::cerr << "experiment failed: " << e.what() << "\n";
    return 1;
  }
}

int cmd_pack_test(int trials, std::uint64_t seed, double radius) {
  const int found = max_packing_in_disk(radius, trials, seed);
  const bool hexagon_ok = is_valid_packing(hexagon_packing(radius), radius,
                                           Tolerance::scaled_to(radius).tau);
  std::cout << "max packing found: " << found << " (trials=" << trials << ", seed=" << seed
            << ")\n";
  std::cout << "regular hexagon 6-packing: " << (hexagon_ok ? "valid" : "INVALID") << "\n";
  if (found > 6) {
    std::cerr << "error: packing exceeded 6 points; the 6-point disk bound is violated\n";
    return 1;
  }
  return hexagon_ok ? 0 : 1;
}

int cmd_gen(const std::string& spec_file, const std::string& out, std::optional<std::uint64_t> seed) {
  GenSpec spec = io::load_genspec_file(spec_file);
  if (seed) spec.seed = *seed;
  const Deployment d = generate(spec);
  io::write_deployment_file(out, d);
  std::cout << "generated " << d.size() << " sensors (" << to_string(spec.kind) << ") -> " << out
            << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"coverage-implies-connectivity toolkit for sensor deployments"};
  app.require_subcommand(1);

  std::string file, out, config_file;
  std::optional<double> tolerance;
  double oracle_step = 0.0;
  int threads = 0;
  int from = 0, to = 0;
  int trials = 100000;
  std::uint64_t seed = 42;
  std::optional<std::uint64_t> seed_override;
  double radius = 1.0;
  std::string reproducer = "route_reproducer.json";

  CLI::App* check = app.add_subcommand("check", "verify coverage, spacing and connectivity");
  check->add_option("file", file, "deployment JSON")->required();
  check->add_option("--tolerance", tolerance, "comparison tolerance override");
  check->add_option("--oracle-step", oracle_step, "cross-check with the grid oracle at this step");
  check->add_option("--threads", threads, "worker threads (0 = auto)");

  CLI::App* redis = app.add_subcommand("redistribute", "repair spacing while preserving coverage");
  redis->add_option("file", file, "deployment JSON")->required();
  redis->add_option("-o,--output", out, "output deployment path")->required();
  redis->add_option("--tolerance", tolerance, "comparison tolerance override");

  CLI::App* route = app.add_subcommand("route", "constructive route between two sensors");
  route->add_option("file", file, "deployment JSON")->required();
  route->add_option("--from", from, "source sensor id")->required();
  route->add_option("--to", to, "destination sensor id")->required();
  route->add_option("--tolerance", tolerance, "comparison tolerance override");
  route->add_option("--reproducer", reproducer, "path for a falsification reproducer");

  CLI::App* exper = app.add_subcommand("experiment", "run a Monte Carlo experiment config");
  exper->add_option("config", config_file, "experiment config JSON")->required();
  exper->add_option("-o,--output", out, "output directory")->required();
  exper->add_option("--threads", threads, "worker threads (0 = auto)");

  CLI::App* pack = app.add_subcommand("pack-test", "randomized disk packing search");
  pack->add_option("--trials", trials, "number of greedy packing trials");
  pack->add_option("--seed", seed, "random seed");
  pack->add_option("--radius", radius, "disk radius");

  CLI::App* gen = app.add_subcommand("gen", "generate a deployment from a spec");
  gen->add_option("spec", config_file, "generator spec JSON")->required();
  gen->add_option("-o,--output", out, "output deployment path")->required();
  gen->add_option("--seed", seed_override, "seed override");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (check->parsed()) return cmd_check(file, tolerance, oracle_step, threads);
    if (redis->parsed()) return cmd_redistribute(file, out, tolerance);
    if (route->parsed()) return cmd_route(file, from, to, tolerance, reproducer);
    if (exper->parsed()) return cmd_experiment(config_file, out, threads);
    if (pack->parsed()) return cmd_pack_test(trials, seed, radius);
    if (gen->parsed()) return cmd_gen(config_file, out, seed_override);
  } catch (const io::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
