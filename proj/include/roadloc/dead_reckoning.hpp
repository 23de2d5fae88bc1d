#pragma once

#include "roadloc/geo.hpp"

#include <Eigen/Core>

namespace roadloc {

/// The dead-reckoning state carried along a trace.
struct LocationEstimate {
  double t = 0.0;
  GeoPoint position;
  double heading_deg = 0.0;         // [0, 360)
  double speed_mps = 0.0;           // >= 0
  double distance_since_reset = 0.0;  // meters, zeroed exactly at reset events
  int resets = 0;
};

/// Complementary filter fusing a compass azimuth stream with a yaw-rate
/// stream: heading = wrap(beta*(prev + yaw_rate*dt) + (1-beta)*azimuth),
/// blended in unwrapped angle space. An empty yaw stream degrades to pure
/// compass (beta = 0).
Eigen::ArrayXd estimate_heading(const Eigen::ArrayXd& azimuth_deg,
                                const Eigen::ArrayXd& yaw_rate_dps, double dt,
                                double beta = 0.95);

/// One dead-reckoning step: integrate speed and displacement from the
/// acceleration along the heading, then propagate the position geodesically.
/// Speed clamps at zero (forward motion only) and the displacement is
/// non-negative.
LocationEstimate dr_step(const LocationEstimate& prev, double accel_along_heading, double dt,
                         double heading_deg);

}  // namespace roadloc
