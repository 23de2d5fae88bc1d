#pragma once

#include <Eigen/Core>

#include <cmath>
#include <numbers>

namespace roadloc {

inline constexpr double kWgs84A = 6378137.0;              // semi-major axis [m]
inline constexpr double kWgs84F = 1.0 / 298.257223563;    // flattening
inline constexpr double kEarthRadius = 6371000.0;         // spherical radius for metrics [m]

inline double deg2rad(double d) { return d * std::numbers::pi / 180.0; }
inline double rad2deg(double r) { return r * 180.0 / std::numbers::pi; }

/// Wrap an angle into [0, 360).
double wrap_degrees(double deg);

/// Wrap an angle difference into [-180, 180).
double wrap_degrees_180(double deg);

/// A WGS-84 position. Longitude is normalized into [-180, 180) on
/// construction; latitude outside [-90, 90] or non-finite input throws.
struct GeoPoint {
  double lat = 0.0;
  double lon = 0.0;

  GeoPoint() = default;
  GeoPoint(double lat_deg, double lon_deg);
};

/// Destination point plus the forward azimuth there, as produced by the
/// direct geodesic solution.
struct GeodesicResult {
  GeoPoint point;
  double final_bearing_deg = 0.0;
};

/// Direct geodesic problem on the WGS-84 ellipsoid (iterative Vincenty
/// solution). Converges to |Δσ| < 1e-12 rad; throws std::runtime_error if the
/// iteration has not converged after 200 rounds.
GeodesicResult vincenty_direct(const GeoPoint& origin, double bearing_deg, double distance_m);

/// Great-circle distance on a spherical earth (haversine). Metric/query use
/// only; dead reckoning propagates with vincenty_direct.
double geo_distance(const GeoPoint& a, const GeoPoint& b);

/// Local east/north tangent-plane coordinates of `p` about `ref`, in meters.
/// Valid for separations up to a few kilometers.
Eigen::Vector2d to_enu(const GeoPoint& p, const GeoPoint& ref);

/// Inverse of to_enu.
GeoPoint from_enu(const Eigen::Vector2d& east_north, const GeoPoint& ref);

}  // namespace roadloc
