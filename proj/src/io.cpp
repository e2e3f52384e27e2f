#include "covcon/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace covcon::io {

using nlohmann::json;

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

namespace {

std::string point_json(const Point& p) {
  return "[" + format_double(p.x) + ", " + format_double(p.y) + "]";
}

std::string deployment_json(const Deployment& d, const std::string& indent) {
  std::ostringstream os;
  os << "{\n";
  os << indent << "  \"format_version\": 1,\n";
  os << indent << "  \"region\": {\"a\": " << format_double(d.region.a)
     << ", \"b\": " << format_double(d.region.b) << "},\n";
  os << indent << "  \"r_s\": " << format_double(d.r_s) << ",\n";
  os << indent << "  \"r_c\": " << format_double(d.r_c) << ",\n";
  os << indent << "  \"tolerance\": " << format_double(d.tau()) << ",\n";
  os << indent << "  \"sensors\": [";
  for (std::size_t i = 0; i < d.sensors.size(); ++i) {
    os << (i == 0 ? "\n" : ",\n") << indent << "    " << point_json(d.sensors[i]);
  }
  if (!d.sensors.empty()) os << "\n" << indent << "  ";
  os << "]\n";
  os << indent << "}";
  return os.str();
}

// --- typed field access with path-carrying errors ---------------------------

const json& need(const json& j, const char* key, const std::string& path) {
  if (!j.is_object()) throw ParseError(path + ": expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw ParseError(path + "." + key + ": missing required field");
  return *it;
}

double need_number(const json& j, const char* key, const std::string& path) {
  const json& v = need(j, key, path);
  if (!v.is_number()) throw ParseError(path + "." + key + ": expected a number");
  return v.get<double>();
}

double opt_number(const json& j, const char* key, double fallback) {
  if (!j.is_object()) return fallback;
  auto it = j.find(key);
  if (it == j.end()) return fallback;
  if (!it->is_number()) throw ParseError(std::string(key) + ": expected a number");
  return it->get<double>();
}

bool opt_bool(const json& j, const char* key, bool fallback) {
  if (!j.is_object()) return fallback;
  auto it = j.find(key);
  if (it == j.end()) return fallback;
  if (!it->is_boolean()) throw ParseError(std::string(key) + ": expected a boolean");
  return it->get<bool>();
}

void check_version(const json& j, const std::string& path) {
  if (!j.is_object()) throw ParseError(path + ": expected a JSON object");
  auto it = j.find("format_version");
  if (it != j.end() && (!it->is_number_integer() || it->get<int>() != 1)) {
    throw ParseError(path + ".format_version: expected 1");
  }
}

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

Point parse_point(const json& v, const std::string& path) {
  if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number()) {
    throw ParseError(path + ": expected [x, y]");
  }
  return {v[0].get<double>(), v[1].get<double>()};
}

Rectangle parse_region(const json& j, const std::string& path) {
  const json& r = need(j, "region", path);
  return {need_number(r, "a", path + ".region"), need_number(r, "b", path + ".region")};
}

Deployment deployment_from_json(const json& j, const std::string& path) {
  check_version(j, path);
  const Rectangle region = parse_region(j, path);
  const double r_s = need_number(j, "r_s", path);
  const double r_c = need_number(j, "r_c", path);
  std::optional<double> tau;
  if (j.contains("tolerance")) tau = need_number(j, "tolerance", path);
  const json& sensors = need(j, "sensors", path);
  if (!sensors.is_array()) throw ParseError(path + ".sensors: expected an array");
  std::vector<Point> pts;
  pts.reserve(sensors.size());
  for (std::size_t i = 0; i < sensors.size(); ++i) {
    pts.push_back(parse_point(sensors[i], path + ".sensors[" + std::to_string(i) + "]"));
  }
  try {
    return make_deployment(std::move(pts), r_s, r_c, region, tau);
  } catch (const std::invalid_argument& e) {
    throw ParseError(path + ": " + e.what());
  }
}

GenSpec genspec_from_json(const json& j, const std::string& path) {
  check_version(j, path);
  GenSpec spec;
  spec.region = parse_region(j, path);
  spec.r_s = need_number(j, "r_s", path);
  spec.r_c = need_number(j, "r_c", path);
  const json& kind = need(j, "kind", path);
  if (!kind.is_string()) throw ParseError(path + ".kind: expected a string");
  try {
    spec.kind = gen_kind_from_string(kind.get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw ParseError(path + ".kind: " + e.what());
  }
  spec.seed = static_cast<std::uint64_t>(opt_number(j, "seed", 0.0));
  if (j.contains("params")) {
    const json& p = j.at("params");
    spec.params.spacing_factor = opt_number(p, "spacing_factor", spec.params.spacing_factor);
    spec.params.jitter = opt_number(p, "jitter", spec.params.jitter);
    spec.params.intensity = opt_number(p, "intensity", spec.params.intensity);
    spec.params.pair_count = static_cast<int>(opt_number(p, "pair_count", spec.params.pair_count));
    spec.params.patience = static_cast<int>(opt_number(p, "patience", spec.params.patience));
  }
  return spec;
}

}  // namespace

std::string deployment_to_string(const Deployment& d) { return deployment_json(d, "") + "\n"; }

Deployment parse_deployment(const std::string& text) {
  return deployment_from_json(parse_json(text), "deployment");
}

void write_deployment_file(const std::string& path, const Deployment& d) {
  write_text_file(path, deployment_to_string(d));
}

Deployment load_deployment_file(const std::string& path) {
  return parse_deployment(read_text_file(path));
}

GenSpec parse_genspec(const std::string& text) {
  return genspec_from_json(parse_json(text), "genspec");
}

GenSpec load_genspec_file(const std::string& path) { return parse_genspec(read_text_file(path)); }

ExperimentConfig parse_experiment_config(const std::string& text) {
  const json j = parse_json(text);
  const std::string path = "experiment";
  check_version(j, path);
  ExperimentConfig cfg;
  cfg.gen = genspec_from_json(need(j, "gen", path), path + ".gen");
  cfg.trials = static_cast<int>(need_number(j, "trials", path));
  if (cfg.trials < 1) throw ParseError(path + ".trials: must be >= 1");
  const json& factors = need(j, "rc_factors", path);
  if (!factors.is_array() || factors.empty()) {
    throw ParseError(path + ".rc_factors: expected a nonempty array");
  }
  for (const auto& f : factors) {
    if (!f.is_number() || !(f.get<double>() > 0.0)) {
      throw ParseError(path + ".rc_factors: factors must be positive numbers");
    }
    cfg.rc_factors.push_back(f.get<double>());
  }
  if (j.contains("checks")) {
    const json& c = j.at("checks");
    cfg.checks.theorem1 = opt_bool(c, "theorem1", cfg.checks.theorem1);
    cfg.checks.lemma3 = opt_bool(c, "lemma3", cfg.checks.lemma3);
    cfg.checks.redistribute = opt_bool(c, "redistribute", cfg.checks.redistribute);
    cfg.checks.route_all_pairs = opt_bool(c, "route_all_pairs", cfg.checks.route_all_pairs);
  }
  cfg.seed = static_cast<std::uint64_t>(opt_number(j, "seed", 0.0));
  cfg.packing_trials = static_cast<int>(opt_number(j, "packing_trials", cfg.packing_trials));
  if (j.contains("tightness_grid")) {
    const json& g = j.at("tightness_grid");
    if (!g.is_array()) throw ParseError(path + ".tightness_grid: expected an array");
    for (const auto& f : g) {
      if (!f.is_number()) throw ParseError(path + ".tightness_grid: expected numbers");
      cfg.tightness_grid.push_back(f.get<double>());
    }
  }
  return cfg;
}

ExperimentConfig load_experiment_config_file(const std::string& path) {
  return parse_experiment_config(read_text_file(path));
}

std::string route_trace_to_string(const RouteTrace& trace) {
  std::ostringstream os;
  os << "{\n";
  os << "  \"format_version\": 1,\n";
  os << "  \"source\": " << trace.source_id << ",\n";
  os << "  \"dest\": " << trace.dest_id << ",\n";
  os << "  \"path\": [";
  for (std::size_t i = 0; i < trace.path.size(); ++i) {
    os << (i ? ", " : "") << trace.path[i];
  }
  os << "],\n";
  os << "  \"steps\": [";
  for (std::size_t i = 0; i < trace.steps.size(); ++i) {
    const MacroStep& s = trace.steps[i];
    os << (i == 0 ? "\n" : ",\n");
    os << "    {\"from\": " << s.from_id << ", \"w\": " << point_json(s.w)
       << ", \"x\": " << s.x_id << ", \"relay\": ";
    if (s.relay) {
      os << "{\"point\": " << point_json(s.relay->via) << ", \"y\": " << s.relay->y_id << "}";
    } else {
      os << "null";
    }
    os << ", \"hops\": [";
    for (std::size_t k = 0; k < s.hop_ids.size(); ++k) os << (k ? ", " : "") << s.hop_ids[k];
    os << "]}";
  }
  if (!trace.steps.empty()) os << "\n  ";
  os << "]\n}\n";
  return os.str();
}

std::string redistribution_to_string(const RedistributionResult& result) {
  std::ostringstream os;
  os << "{\n";
  os << "  \"format_version\": 1,\n";
  os << "  \"iterations\": " << result.iterations << ",\n";
  os << "  \"steps\": [";
  for (std::size_t i = 0; i < result.steps.size(); ++i) {
    const RedistributionStep& s = result.steps[i];
    os << (i == 0 ? "\n" : ",\n");
    os << "    {\"removed_id\": " << s.removed_id << ", \"removed_pos\": "
       << point_json(s.removed_pos) << ", \"partner_id\": " << s.partner_id << ", \"added\": [";
    for (std::size_t k = 0; k < s.added.size(); ++k) {
      os << (k ? ", " : "") << point_json(s.added[k]);
    }
    os << "]}";
  }
  if (!result.steps.empty()) os << "\n  ";
  os << "],\n";
  os << "  \"final\": " << deployment_json(result.final, "  ") << "\n";
  os << "}\n";
  return os.str();
}

std::string summary_to_string(const ExperimentSummary& s) {
  std::ostringstream os;
  os << "{\n";
  os << "  \"format_version\": 1,\n";
  os << "  \"trials\": " << s.trials << ",\n";
  os << "  \"hypothesis_trials\": " << s.hypothesis_trials << ",\n";
  os << "  \"filtered_out\": " << s.filtered_out << ",\n";
  os << "  \"per_factor\": [";
  for (std::size_t i = 0; i < s.per_factor.size(); ++i) {
    const FactorSummary& f = s.per_factor[i];
    const double rate =
        f.hypothesis_trials > 0 ? static_cast<double>(f.connected) / f.hypothesis_trials : 0.0;
    os << (i == 0 ? "\n" : ",\n");
    os << "    {\"rc_factor\": " << format_double(f.rc_factor)
       << ", \"hypothesis_trials\": " << f.hypothesis_trials << ", \"connected\": " << f.connected
       << ", \"rate\": " << format_double(rate) << "}";
  }
  if (!s.per_factor.empty()) os << "\n  ";
  os << "],\n";
  os << "  \"margin\": {\"min\": " << format_double(s.margin_min)
     << ", \"max\": " << format_double(s.margin_max)
     << ", \"mean\": " << format_double(s.margin_mean) << ", \"histogram\": [";
  for (std::size_t i = 0; i < s.margin_histogram.size(); ++i) {
    os << (i ? ", " : "") << s.margin_histogram[i];
  }
  os << "]},\n";
  os << "  \"max_additions\": " << s.max_additions << ",\n";
  os << "  \"packing_max\": " << s.packing_max << ",\n";
  os << "  \"route_pairs\": " << s.route_pairs << ",\n";
  os << "  \"route_failures\": " << s.route_failures << "\n";
  os << "}\n";
  return os.str();
}

std::string probe_to_string(const ProbeResult& probe) {
  std::ostringstream os;
  os << "{\n";
  os << "  \"format_version\": 1,\n";
  os << "  \"trials\": " << probe.trials << ",\n";
  os << "  \"hypothesis_trials\": " << probe.hypothesis_trials << ",\n";
  os << "  \"counts\": [";
  for (std::size_t i = 0; i < probe.counts.size(); ++i) {
    os << (i == 0 ? "\n" : ",\n");
    os << "    {\"rc_factor\": " << format_double(probe.counts[i].rc_factor)
       << ", \"disconnected\": " << probe.counts[i].disconnected << "}";
  }
  if (!probe.counts.empty()) os << "\n  ";
  os << "],\n";
  os << "  \"reproducers\": [";
  for (std::size_t i = 0; i < probe.reproducer_paths.size(); ++i) {
    os << (i == 0 ? "\n" : ",\n") << "    \"" << probe.reproducer_paths[i] << "\"";
  }
  if (!probe.reproducer_paths.empty()) os << "\n  ";
  os << "]\n}\n";
  return os.str();
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open file: " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write file: " + path);
  out << content;
}

}  // namespace covcon::io
