#pragma once

#include <string>

namespace roadloc {

/// Detector thresholds for the physical-anchor state machine. Channel
/// statistics are taken after smoothing, so the variance bands are in
/// smoothed-signal units. Config keys are exactly these field names.
struct DetectorThresholds {
  double theta_orient_var = 0.8;        // deg^2, curve entry
  double theta_turn_angle = 55.0;       // deg, curve episodes at least this sharp are turns
  double theta_rss_drop = 18.0;         // strength units below the running baseline
  double theta_magx_var_hi = 0.3;       // uT^2, tunnel entry
  double theta_magy_var_lo = 0.1;       // uT^2, tunnel entry requires calm y-field
  double theta_gvar_trigger = 0.002;    // (m/s^2)^2, opens a short gravity episode
  double theta_gvar_catseye_max = 0.02; // (m/s^2)^2
  double theta_gvar_rail_lo = 0.04;     // (m/s^2)^2
  double theta_gvar_rail_hi = 0.30;     // (m/s^2)^2
  double theta_gvar_hump_min = 0.55;    // (m/s^2)^2
  double theta_pitch_delta = 0.30;      // m/s^2, gravity-y mean deviation for bridge ramps
  double d_bridge_min = 100.0;          // m, minimum rise-to-fall span of a bridge
  double d_anomaly_max = 60.0;          // m, maximum extent of a short gravity episode
  double d_rail_min = 4.0;              // m, minimum extent of a railway episode

  /// Positivity plus the band orderings rail_lo < rail_hi < hump_min and
  /// d_anomaly_max < d_bridge_min. Throws std::invalid_argument.
  void validate() const;
};

struct PipelineConfig {
  double smoothing_window_s = 0.4;  // LOWESS neighbor span, seconds
  double window_seconds = 2.0;
  double overlap_fraction = 0.5;
  double heading_beta = 0.95;
};

struct MiningConfig {
  double alpha = 0.4;                  // anomaly significance
  double scalar_merge_threshold = 0.3; // stage-1 cut, normalized feature space
  double wifi_similarity_threshold = 0.4;   // stage-1 merges at distance <= 1 - this
  double cell_similarity_threshold = 0.25;
  int min_support = 5;
  double stage2_eps_m = 30.0;
  int stage2_min_pts = 5;
  double stage2_max_extent_m = 100.0;
  double exclusion_radius_m = 150.0;
  int max_stage1_points = 1500;        // deterministic stride subsample cap
  double vector_scan_stride_s = 4.0;   // snapshot subsampling for vector mining
};

struct MatchingConfig {
  double search_radius_m = 250.0;
  double probe_throttle_s = 2.0;   // at most one reset per this interval
  double ambiguous_pair_m = 10.0;  // two candidates this close are ambiguous
  double cell_match_threshold = 0.25;
  double wifi_match_threshold = 0.4;
  double scalar_match_threshold = 0.7;  // on 1 - normalized feature distance
  double map_context_radius_m = 250.0;
};

struct Config {
  PipelineConfig pipeline;
  DetectorThresholds thresholds;
  MiningConfig mining;
  MatchingConfig matching;

  /// City parameters are the defaults; highway widens the spatial scales
  /// (stage-2 eps 75 m, exclusion 400 m, search radius 500 m) and loosens
  /// the cell merge threshold to 0.3.
  static Config city();
  static Config highway();
};

/// Plain-text `key = value` file, '#' comments. Unknown keys are rejected;
/// missing keys keep their defaults.
Config load_config_file(const std::string& path);
void save_config_file(const Config& config, const std::string& path);

Config parse_config(const std::string& text);
std::string format_config(const Config& config);

}  // namespace roadloc
