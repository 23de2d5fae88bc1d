#include "roadloc/config.hpp"

#include "roadloc/trace_io.hpp"

#include <fstream>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>

namespace roadloc {

void DetectorThresholds::validate() const {
  const double fields[] = {theta_orient_var,       theta_turn_angle,   theta_rss_drop,
                           theta_magx_var_hi,      theta_magy_var_lo,  theta_gvar_trigger,
                           theta_gvar_catseye_max, theta_gvar_rail_lo, theta_gvar_rail_hi,
                           theta_gvar_hump_min,    theta_pitch_delta,  d_bridge_min,
                           d_anomaly_max,          d_rail_min};
  for (double f : fields) {
    if (!(f > 0.0)) throw std::invalid_argument("thresholds: all fields must be positive");
  }
  if (!(theta_gvar_rail_lo < theta_gvar_rail_hi && theta_gvar_rail_hi < theta_gvar_hump_min))
    throw std::invalid_argument("thresholds: require rail_lo < rail_hi < hump_min");
  if (!(d_anomaly_max < d_bridge_min))
    throw std::invalid_argument("thresholds: require d_anomaly_max < d_bridge_min");
}

Config Config::city() { return Config{}; }

Config Config::highway() {
  Config c;
  c.mining.cell_similarity_threshold = 0.3;
  c.mining.stage2_eps_m = 75.0;
  c.mining.exclusion_radius_m = 400.0;
  c.matching.search_radius_m = 500.0;
  c.matching.cell_match_threshold = 0.3;
  return c;
}

namespace {

struct Field {
  std::function<double*(Config&)> get;
};

const std::map<std::string, Field>& field_table() {
  static const std::map<std::string, Field> table = {
      {"smoothing_window_s", {[](Config& c) { return &c.pipeline.smoothing_window_s; }}},
      {"window_seconds", {[](Config& c) { return &c.pipeline.window_seconds; }}},
      {"overlap_fraction", {[](Config& c) { return &c.pipeline.overlap_fraction; }}},
      {"heading_beta", {[](Config& c) { return &c.pipeline.heading_beta; }}},

      {"theta_orient_var", {[](Config& c) { return &c.thresholds.theta_orient_var; }}},
      {"theta_turn_angle", {[](Config& c) { return &c.thresholds.theta_turn_angle; }}},
      {"theta_rss_drop", {[](Config& c) { return &c.thresholds.theta_rss_drop; }}},
      {"theta_magx_var_hi", {[](Config& c) { return &c.thresholds.theta_magx_var_hi; }}},
      {"theta_magy_var_lo", {[](Config& c) { return &c.thresholds.theta_magy_var_lo; }}},
      {"theta_gvar_trigger", {[](Config& c) { return &c.thresholds.theta_gvar_trigger; }}},
      {"theta_gvar_catseye_max", {[](Config& c) { return &c.thresholds.theta_gvar_catseye_max; }}},
      {"theta_gvar_rail_lo", {[](Config& c) { return &c.thresholds.theta_gvar_rail_lo; }}},
      {"theta_gvar_rail_hi", {[](Config& c) { return &c.thresholds.theta_gvar_rail_hi; }}},
      {"theta_gvar_hump_min", {[](Config& c) { return &c.thresholds.theta_gvar_hump_min; }}},
      {"theta_pitch_delta", {[](Config& c) { return &c.thresholds.theta_pitch_delta; }}},
      {"d_bridge_min", {[](Config& c) { return &c.thresholds.d_bridge_min; }}},
      {"d_anomaly_max", {[](Config& c) { return &c.thresholds.d_anomaly_max; }}},
      {"d_rail_min", {[](Config& c) { return &c.thresholds.d_rail_min; }}},

      {"alpha", {[](Config& c) { return &c.mining.alpha; }}},
      {"scalar_merge_threshold", {[](Config& c) { return &c.mining.scalar_merge_threshold; }}},
      {"wifi_similarity_threshold", {[](Config& c) { return &c.mining.wifi_similarity_threshold; }}},
      {"cell_similarity_threshold", {[](Config& c) { return &c.mining.cell_similarity_threshold; }}},
      {"stage2_eps_m", {[](Config& c) { return &c.mining.stage2_eps_m; }}},
      {"stage2_max_extent_m", {[](Config& c) { return &c.mining.stage2_max_extent_m; }}},
      {"exclusion_radius_m", {[](Config& c) { return &c.mining.exclusion_radius_m; }}},
      {"vector_scan_stride_s", {[](Config& c) { return &c.mining.vector_scan_stride_s; }}},

      {"search_radius_m", {[](Config& c) { return &c.matching.search_radius_m; }}},
      {"probe_throttle_s", {[](Config& c) { return &c.matching.probe_throttle_s; }}},
      {"ambiguous_pair_m", {[](Config& c) { return &c.matching.ambiguous_pair_m; }}},
      {"cell_match_threshold", {[](Config& c) { return &c.matching.cell_match_threshold; }}},
      {"wifi_match_threshold", {[](Config& c) { return &c.matching.wifi_match_threshold; }}},
      {"scalar_match_threshold", {[](Config& c) { return &c.matching.scalar_match_threshold; }}},
      {"map_context_radius_m", {[](Config& c) { return &c.matching.map_context_radius_m; }}},
  };
  return table;
}

// Integer-valued knobs handled separately.
const std::map<std::string, std::function<int*(Config&)>>& int_field_table() {
  static const std::map<std::string, std::function<int*(Config&)>> table = {
      {"min_support", [](Config& c) { return &c.mining.min_support; }},
      {"stage2_min_pts", [](Config& c) { return &c.mining.stage2_min_pts; }},
      {"max_stage1_points", [](Config& c) { return &c.mining.max_stage1_points; }},
  };
  return table;
}

std::string trim(const std::string& s) {
  const auto a = s.find_first_not_of(" \t\r");
  const auto b = s.find_last_not_of(" \t\r");
  if (a == std::string::npos) return "";
  return s.substr(a, b - a + 1);
}

}  // namespace

Config parse_config(const std::string& text) {
  Config config;
  std::istringstream in(text);
  std::string line;
  size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ParseError("config line " + std::to_string(line_no) + ": expected key = value");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    double num = 0.0;
    try {
      num = std::stod(value);
    } catch (const std::exception&) {
      throw ParseError("config line " + std::to_string(line_no) + ": bad number '" + value + "'");
    }
    if (auto it = field_table().find(key); it != field_table().end()) {
      *it->second.get(config) = num;
    } else if (auto ii = int_field_table().find(key); ii != int_field_table().end()) {
      *ii->second(config) = static_cast<int>(num);
    } else {
      throw ParseError("config line " + std::to_string(line_no) + ": unknown key '" + key + "'");
    }
  }
  config.thresholds.validate();
  return config;
}

std::string format_config(const Config& config) {
  std::ostringstream out;
  out.precision(17);
  Config mutable_copy = config;
  for (const auto& [key, field] : field_table()) {
    out << key << " = " << *field.get(mutable_copy) << '\n';
  }
  for (const auto& [key, get] : int_field_table()) {
    out << key << " = " << *get(mutable_copy) << '\n';
  }
  return out.str();
}

Config load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open config file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

void save_config_file(const Config& config, const std::string& path) {
  atomic_write_file(path, format_config(config));
}

}  // namespace roadloc
