#pragma once

#include "roadloc/trace.hpp"
#include "roadloc/trace_io.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace roadloc {

/// Deterministic RNG with explicit transforms so that seeded outputs are
/// stable across standard-library versions.
class Rng {
 public:
  explicit Rng(uint64_t seed) : state_(seed ? seed : 0x9E3779B97F4A7C15ull) {}

  uint64_t next_u64();
  double uniform(double lo = 0.0, double hi = 1.0);
  double normal(double mean = 0.0, double sigma = 1.0);
  int uniform_int(int lo, int hi);  // inclusive bounds

 private:
  uint64_t state_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

/// Stable stream derivation for per-trip / per-purpose generators.
uint64_t derive_seed(uint64_t base, uint64_t stream);

struct NoiseModel {
  double accel_sigma = 1.2;    // m/s^2 on linear acceleration
  double azimuth_sigma = 1.2;  // deg on the compass
  double magnetic_sigma = 0.5; // uT per axis
  double rss_sigma = 2.0;      // strength units of shadowing
  double device_gain = 1.0;    // heterogeneity knob on acceleration amplitudes
};

/// Physical landmark along the road. `s` is the arc-length position of the
/// feature start; extended features carry a length and curves/turns a signed
/// heading change.
struct LandmarkSpec {
  AnchorClassKind kind = AnchorClassKind::Bump;
  double s = 0.0;
  double length = 0.0;
  double angle_deg = 0.0;
};

/// Scalar features planted for the virtual miner (not detector classes).
enum class PlantKind : uint8_t { Pothole, MetalPlateZ, MetalPlateY };

struct PlantSpec {
  PlantKind kind = PlantKind::Pothole;
  double s = 0.0;
};

struct RadioTx {
  std::string id;
  GeoPoint position;
  double p0 = 50.0;        // strength units at reference distance
  double exponent = 3.5;   // path-loss exponent
  double d0 = 10.0;        // reference distance [m]
};

struct RoadSpec {
  std::string name;
  GeoPoint start;
  double start_heading_deg = 90.0;
  double length_m = 1500.0;
  std::vector<LandmarkSpec> landmarks;
  std::vector<PlantSpec> plants;
  std::vector<RadioTx> cells;
  std::vector<RadioTx> wifi;
};

/// Road centerline discretized at 1 m, chained with the same geodesic step
/// the dead-reckoner uses.
class RoadGeometry {
 public:
  explicit RoadGeometry(const RoadSpec& spec);

  GeoPoint position_at(double s) const;
  double heading_at(double s) const;
  double length() const { return length_; }

 private:
  std::vector<GeoPoint> nodes_;     // every 1 m
  std::vector<double> headings_;   // per node
  double length_ = 0.0;
};

struct TripParams {
  std::string id;
  uint64_t seed = 1;
  double v_lo = 2.2;         // cruise band [m/s]
  double v_hi = 5.5;
  double a_max = 0.6;        // m/s^2 toward the current target speed
  double ramp_accel = 0.8;   // initial pull-away
  double seg_lo_s = 20.0;    // seconds between target-speed changes
  double seg_hi_s = 45.0;
};

struct SimResult {
  Trace trace;
  std::vector<LabeledEvent> labels;  // one per landmark, representative placement
};

/// Synthesizes one trip over the road: 25 Hz inertial, 1 Hz cell, 0.5 Hz
/// WiFi, 25 Hz ground truth, landmark signatures injected, fully
/// deterministic per (road, trip, noise).
SimResult simulate_trip(const RoadSpec& road, const TripParams& trip, const NoiseModel& noise);

/// Physical classes present near each location, for the matching map filter.
std::vector<std::pair<AnchorClass, GeoPoint>> map_context_of(const RoadSpec& road);

struct Scenario {
  std::string name;
  uint64_t seed = 1;
  RoadSpec road;
  NoiseModel noise;
  std::vector<TripParams> trips;
};

Scenario build_city_scenario(uint64_t seed, int n_trips = 12);
Scenario build_highway_scenario(uint64_t seed, int n_trips = 8);

/// Dedicated mining scenarios.
Scenario build_pothole_scenario(uint64_t seed, int n_trips = 20);
Scenario build_cell_zone_scenario(uint64_t seed, int n_trips = 12);

/// Episode roads for detector evaluation: single-landmark-class episodes
/// mixed into traces, with per-episode labels. `counts` maps detector class
/// to the number of episodes wanted.
std::vector<std::pair<RoadSpec, TripParams>> build_episode_roads(
    uint64_t seed, const std::vector<std::pair<AnchorClassKind, int>>& counts);

/// Table-style episode mix used by the detector evaluation suite:
/// 27 cat's eyes, 33 bumps, 20 curves, 14 railway crossings, 10 bridges,
/// 10 tunnels, 40 turns.
std::vector<std::pair<AnchorClassKind, int>> default_episode_mix();

/// Scenario JSON document round trip.
std::string scenario_to_json(const Scenario& scenario);
Scenario scenario_from_json(const std::string& text);
void save_scenario_file(const Scenario& scenario, const std::string& path);
Scenario load_scenario_file(const std::string& path);

}  // namespace roadloc
