#pragma once

// Brute-force geodesic oracle: integrates the geodesic ODE system on the
// WGS-84 ellipsoid with fixed-step RK4. Independent of the closed-form
// solution in roadloc/geo.hpp; used to cross-check it.

#include "roadloc/geo.hpp"

#include <cmath>

namespace roadloc::testing {

struct GeodesicState {
  double phi;     // latitude [rad]
  double lam;     // longitude [rad]
  double alpha;   // forward azimuth [rad]
};

inline GeodesicState geodesic_derivative(const GeodesicState& s) {
  const double a = kWgs84A;
  const double f = kWgs84F;
  const double e2 = f * (2.0 - f);
  const double sp = std::sin(s.phi);
  const double w = std::sqrt(1.0 - e2 * sp * sp);
  const double meridian_radius = a * (1.0 - e2) / (w * w * w);
  const double normal_radius = a / w;
  GeodesicState d;
  d.phi = std::cos(s.alpha) / meridian_radius;
  d.lam = std::sin(s.alpha) / (normal_radius * std::cos(s.phi));
  d.alpha = std::sin(s.alpha) * std::tan(s.phi) / normal_radius;
  return d;
}

inline GeoPoint geodesic_rk4(const GeoPoint& origin, double bearing_deg, double distance_m,
                             double* final_bearing_deg = nullptr) {
  GeodesicState s{deg2rad(origin.lat), deg2rad(origin.lon), deg2rad(bearing_deg)};
  const int steps = std::max(128, static_cast<int>(std::ceil(distance_m / 50.0)));
  const double h = distance_m / steps;
  for (int i = 0; i < steps; ++i) {
    const GeodesicState k1 = geodesic_derivative(s);
    GeodesicState s2{s.phi + 0.5 * h * k1.phi, s.lam + 0.5 * h * k1.lam,
                     s.alpha + 0.5 * h * k1.alpha};
    const GeodesicState k2 = geodesic_derivative(s2);
    GeodesicState s3{s.phi + 0.5 * h * k2.phi, s.lam + 0.5 * h * k2.lam,
                     s.alpha + 0.5 * h * k2.alpha};
    const GeodesicState k3 = geodesic_derivative(s3);
    GeodesicState s4{s.phi + h * k3.phi, s.lam + h * k3.lam, s.alpha + h * k3.alpha};
    const GeodesicState k4 = geodesic_derivative(s4);
    s.phi += h / 6.0 * (k1.phi + 2.0 * k2.phi + 2.0 * k3.phi + k4.phi);
    s.lam += h / 6.0 * (k1.lam + 2.0 * k2.lam + 2.0 * k3.lam + k4.lam);
    s.alpha += h / 6.0 * (k1.alpha + 2.0 * k2.alpha + 2.0 * k3.alpha + k4.alpha);
  }
  if (final_bearing_deg) *final_bearing_deg = wrap_degrees(rad2deg(s.alpha));
  return GeoPoint(rad2deg(s.phi), rad2deg(s.lam));
}

}  // namespace roadloc::testing
