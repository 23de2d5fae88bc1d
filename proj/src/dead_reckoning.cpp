#include "roadloc/dead_reckoning.hpp"

#include <cmath>
#include <stdexcept>

namespace roadloc {

Eigen::ArrayXd estimate_heading(const Eigen::ArrayXd& azimuth_deg,
                                const Eigen::ArrayXd& yaw_rate_dps, double dt, double beta) {
  const Eigen::Index n = azimuth_deg.size();
  Eigen::ArrayXd out(n);
  if (n == 0) return out;
  const bool have_yaw = yaw_rate_dps.size() == n;
  const double b = have_yaw ? beta : 0.0;

  double heading = azimuth_deg[0];  // unwrapped working value
  out[0] = wrap_degrees(heading);
  for (Eigen::Index i = 1; i < n; ++i) {
    const double predicted = heading + (have_yaw ? yaw_rate_dps[i] * dt : 0.0);
    // Align the wrapped observation with the prediction before blending.
    const double observed = predicted + wrap_degrees_180(azimuth_deg[i] - predicted);
    heading = b * predicted + (1.0 - b) * observed;
    out[i] = wrap_degrees(heading);
  }
  return out;
}

LocationEstimate dr_step(const LocationEstimate& prev, double accel_along_heading, double dt,
                         double heading_deg) {
  if (!(dt > 0.0)) throw std::invalid_argument("dr_step: dt <= 0");
  if (!std::isfinite(accel_along_heading) || !std::isfinite(heading_deg))
    throw std::invalid_argument("dr_step: non-finite input");

  LocationEstimate next = prev;
  next.t = prev.t + dt;
  next.heading_deg = wrap_degrees(heading_deg);
  const double displacement =
      std::max(0.0, prev.speed_mps * dt + 0.5 * accel_along_heading * dt * dt);
  next.speed_mps = std::max(0.0, prev.speed_mps + accel_along_heading * dt);
  if (displacement > 0.0) {
    next.position = vincenty_direct(prev.position, next.heading_deg, displacement).point;
  }
  next.distance_since_reset = prev.distance_since_reset + displacement;
  return next;
}

}  // namespace roadloc
