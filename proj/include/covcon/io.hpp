#pragma once

#include <string>

#include "covcon/coverage.hpp"
#include "covcon/experiments.hpp"
#include "covcon/generate.hpp"
#include "covcon/redistribute.hpp"
#include "covcon/routing.hpp"

namespace covcon::io {

/// Raised on malformed files: unparsable JSON or invalid/missing fields.
/// Messages carry the field path (and the parser's byte position for syntax
/// errors) so the failure is locatable.
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// Canonical float rendering: %.17g, enough digits to reload bit-identically.
std::string format_double(double v);

// Deployment files:
// {"format_version": 1, "region": {"a": ..., "b": ...}, "r_s": ..., "r_c": ...,
//  "tolerance": ..., "sensors": [[x, y], ...]}
// The writer emits exactly this shape with %.17g numbers, so write -> read -> write
// is byte-stable. "tolerance" is optional on input (default 1e-9 * r_s).
std::string deployment_to_string(const Deployment& d);
Deployment parse_deployment(const std::string& text);
void write_deployment_file(const std::string& path, const Deployment& d);
Deployment load_deployment_file(const std::string& path);

// Generator spec files:
// {"format_version": 1, "kind": "...", "region": {...}, "r_s": ..., "r_c": ...,
//  "seed": ..., "params": {"spacing_factor": ..., "jitter": ..., "intensity": ...,
//  "pair_count": ..., "patience": ...}}  (params and its fields optional)
GenSpec parse_genspec(const std::string& text);
GenSpec load_genspec_file(const std::string& path);

// Experiment config files:
// {"format_version": 1, "gen": {genspec}, "trials": ..., "rc_factors": [...],
//  "checks": {"theorem1": ..., "lemma3": ..., "redistribute": ..., "route_all_pairs": ...},
//  "seed": ..., "packing_trials": ..., "tightness_grid": [...]}
ExperimentConfig parse_experiment_config(const std::string& text);
ExperimentConfig load_experiment_config_file(const std::string& path);

std::string route_trace_to_string(const RouteTrace& trace);
std::string redistribution_to_string(const RedistributionResult& result);
std::string summary_to_string(const ExperimentSummary& summary);
std::string probe_to_string(const ProbeResult& probe);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace covcon::io
