#pragma once

#include "roadloc/geo.hpp"
#include "roadloc/signal.hpp"

#include <Eigen/Core>

#include <algorithm>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace roadloc {

/// Strengths are stored as non-negative magnitudes: dBm + 120, clipped into
/// [0, 120]. 0 means "not heard".
inline double rss_units_from_dbm(double dbm) {
  return std::clamp(dbm + 120.0, 0.0, 120.0);
}

/// Axes follow the in-car mount convention: y along the direction of motion,
/// x perpendicular, z vertical. Orientation is (azimuth, pitch, roll) in
/// degrees with azimuth in [0, 360).
struct InertialSample {
  double t = 0.0;
  Eigen::Vector3d linear_accel = Eigen::Vector3d::Zero();
  Eigen::Vector3d gravity_accel = Eigen::Vector3d::Zero();
  Eigen::Vector3d magnetic = Eigen::Vector3d::Zero();
  Eigen::Vector3d orientation = Eigen::Vector3d::Zero();
};

struct RssReading {
  std::string id;
  double rss = 0.0;
};

struct CellScan {
  double t = 0.0;
  RssReading serving;
  std::vector<RssReading> neighbors;  // at most 6
};

struct WifiScan {
  double t = 0.0;
  std::vector<RssReading> aps;
};

struct TruthPoint {
  double t = 0.0;
  GeoPoint point;
};

struct StartPose {
  GeoPoint point;
  double heading_deg = 0.0;
};

struct Trace {
  std::string id;
  StartPose start;
  std::vector<InertialSample> inertial;
  std::vector<CellScan> cells;
  std::vector<WifiScan> wifi;
  std::vector<TruthPoint> ground_truth;
};

/// Throws std::invalid_argument when any type invariant is violated
/// (non-finite values, azimuth range, non-monotone timestamps, duplicate
/// transmitter ids, truth span not covering the inertial span).
void validate(const Trace& trace);
void validate(const InertialSample& s);
void validate(const CellScan& s);
void validate(const WifiScan& s);

enum class AnchorClassKind : uint8_t {
  CatsEye,
  Bump,
  Curve,
  Turn,
  RailwayCrossing,
  Bridge,
  Tunnel,
  StretchMark,
  VirtualCell,
  VirtualWifi,
  VirtualScalar,
};

bool is_physical(AnchorClassKind kind);
const char* to_string(AnchorClassKind kind);
AnchorClassKind anchor_class_kind_from_string(const std::string& s);

/// Anchor class; VirtualScalar additionally carries its source channel and
/// the feature kind that flagged it.
struct AnchorClass {
  AnchorClassKind kind = AnchorClassKind::Bump;
  ChannelId channel = ChannelId::GravityY;    // VirtualScalar only
  FeatureKind feature = FeatureKind::Variance;  // VirtualScalar only

  static AnchorClass physical(AnchorClassKind k) { return {k, ChannelId::GravityY, FeatureKind::Variance}; }
  static AnchorClass virtual_cell() { return {AnchorClassKind::VirtualCell, ChannelId::GravityY, FeatureKind::Variance}; }
  static AnchorClass virtual_wifi() { return {AnchorClassKind::VirtualWifi, ChannelId::GravityY, FeatureKind::Variance}; }
  static AnchorClass virtual_scalar(ChannelId ch, FeatureKind f) {
    return {AnchorClassKind::VirtualScalar, ch, f};
  }

  friend bool operator==(const AnchorClass& a, const AnchorClass& b) {
    if (a.kind != b.kind) return false;
    if (a.kind != AnchorClassKind::VirtualScalar) return true;
    return a.channel == b.channel && a.feature == b.feature;
  }
};

std::string to_string(const AnchorClass& cls);

/// Transmitter id -> strength snapshot, kept sorted by id.
using RssVector = std::vector<std::pair<std::string, double>>;

RssVector rss_vector_from(const CellScan& scan);
RssVector rss_vector_from(const WifiScan& scan);

/// Eq.-style similarity between two RSS snapshots: mean over the union of
/// transmitter ids of min/max strength ratios. Absent ids contribute 0.
/// Result is in [0, 1]; two empty vectors give 0. Inputs must be sorted.
double rss_similarity(const RssVector& a, const RssVector& b);

struct ScalarSignature {
  Eigen::Vector4d centroid = Eigen::Vector4d::Zero();   // (mean, max, variance, skewness)
  Eigen::Vector4d scale_min = Eigen::Vector4d::Zero();  // per-dimension pool minima
  Eigen::Vector4d scale_max = Eigen::Vector4d::Ones();

  friend bool operator==(const ScalarSignature& a, const ScalarSignature& b) {
    return a.centroid == b.centroid && a.scale_min == b.scale_min && a.scale_max == b.scale_max;
  }
};

using AnchorSignature = std::variant<std::monostate, RssVector, ScalarSignature>;

/// A located landmark. The location is the running weighted mean of ingested
/// reports; the east/north accumulator is kept about `ref` so that replaying
/// ingests reproduces the location exactly.
struct Anchor {
  std::string id;
  AnchorClass cls;
  GeoPoint location;
  AnchorSignature signature;
  int report_count = 1;
  double weight_sum = 0.0;
  GeoPoint ref;                                    // tangent-plane reference
  Eigen::Vector2d weighted_enu = Eigen::Vector2d::Zero();  // sum of w_i * enu_i
};

/// Makes an anchor from its first report. Weight is 1/max(1 m, trace_length).
Anchor make_anchor(std::string id, AnchorClass cls, const GeoPoint& location,
                   double trace_length_m, AnchorSignature signature = std::monostate{});

/// Folds one more report into the anchor's weighted-mean location.
void anchor_add_report(Anchor& anchor, const GeoPoint& location, double trace_length_m);

}  // namespace roadloc
