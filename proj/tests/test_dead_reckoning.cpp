#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "roadloc/dead_reckoning.hpp"

#include <cmath>

using namespace roadloc;

TEST_CASE("constant azimuth with zero yaw rate is a fixed point") {
  const int n = 100;
  Eigen::ArrayXd az = Eigen::ArrayXd::Constant(n, 90.0);
  Eigen::ArrayXd yaw = Eigen::ArrayXd::Zero(n);
  Eigen::ArrayXd h = estimate_heading(az, yaw, 0.04);
  for (int i = 0; i < n; ++i) CHECK(h[i] == doctest::Approx(90.0));
}

TEST_CASE("alternating azimuth stays inside the observation envelope") {
  const int n = 200;
  Eigen::ArrayXd az(n), yaw = Eigen::ArrayXd::Zero(n);
  for (int i = 0; i < n; ++i) az[i] = i % 2 == 0 ? 89.0 : 91.0;
  Eigen::ArrayXd h = estimate_heading(az, yaw, 0.1);
  for (int i = 0; i < n; ++i) {
    CHECK(h[i] >= 89.0 - 1e-12);
    CHECK(h[i] <= 91.0 + 1e-12);
  }
}

TEST_CASE("gyro drift decays geometrically back to the compass") {
  // 1 deg/s of yaw for 10 s against a constant 0-degree compass, then zero
  // yaw. At beta = 0.95 the offset decays by 0.95 per step.
  const double dt = 0.1;
  const int n_drift = 100, n_settle = 500;  // 10 s + 50 s
  Eigen::ArrayXd az = Eigen::ArrayXd::Zero(n_drift + n_settle);
  Eigen::ArrayXd yaw(n_drift + n_settle);
  for (int i = 0; i < n_drift + n_settle; ++i) yaw[i] = i < n_drift ? 1.0 : 0.0;
  Eigen::ArrayXd h = estimate_heading(az, yaw, dt, 0.95);

  const double at_10s = wrap_degrees_180(h[n_drift - 1]);
  CHECK(std::abs(at_10s) > 0.5);  // the gyro pulled the heading away
  const double at_end = wrap_degrees_180(h[n_drift + n_settle - 1]);
  CHECK(std::abs(at_end) < 1.0);  // and the compass pulled it back

  // Geometric decay: offset after k settle steps ~ offset * 0.95^k.
  const double offset0 = wrap_degrees_180(h[n_drift]);
  const double offset20 = wrap_degrees_180(h[n_drift + 20]);
  CHECK(std::abs(offset20) <= std::abs(offset0) * std::pow(0.95, 19));
}

TEST_CASE("missing gyro degrades to compass-only") {
  Eigen::ArrayXd az(4);
  az << 10, 20, 30, 40;
  Eigen::ArrayXd h = estimate_heading(az, Eigen::ArrayXd(), 0.1, 0.95);
  for (int i = 0; i < 4; ++i) CHECK(h[i] == doctest::Approx(az[i]));
}

TEST_CASE("heading blending handles the 0/360 seam") {
  const int n = 50;
  Eigen::ArrayXd az(n), yaw = Eigen::ArrayXd::Zero(n);
  for (int i = 0; i < n; ++i) az[i] = i % 2 == 0 ? 359.0 : 1.0;
  Eigen::ArrayXd h = estimate_heading(az, yaw, 0.1);
  for (int i = 0; i < n; ++i) {
    const double d = std::abs(wrap_degrees_180(h[i] - 0.0));
    CHECK(d <= 1.0 + 1e-9);
  }
}

TEST_CASE("dr_step at rest does nothing") {
  LocationEstimate e;
  e.position = GeoPoint(31.2, 29.95);
  LocationEstimate n = dr_step(e, 0.0, 0.1, 45.0);
  CHECK(n.speed_mps == 0.0);
  CHECK(n.position.lat == e.position.lat);
  CHECK(n.position.lon == e.position.lon);
  CHECK(n.distance_since_reset == 0.0);
  CHECK(n.t == doctest::Approx(0.1));
}

TEST_CASE("dr_step integrates constant acceleration exactly") {
  LocationEstimate e;
  e.position = GeoPoint(0.0, 0.0);
  for (int i = 0; i < 100; ++i) e = dr_step(e, 1.0, 0.1, 90.0);
  CHECK(std::abs(e.distance_since_reset - 50.0) < 0.5);
  CHECK(e.speed_mps == doctest::Approx(10.0));
  // Eastward from the equator: longitude grows, latitude pinned.
  CHECK(e.position.lon > 0.0);
  CHECK(std::abs(e.position.lat) < 1e-6);
}

TEST_CASE("speed clamps at zero under hard braking") {
  LocationEstimate e;
  e.position = GeoPoint(0.0, 0.0);
  e.speed_mps = 1.0;
  e = dr_step(e, -30.0, 0.5, 0.0);
  CHECK(e.speed_mps == 0.0);
  CHECK(e.distance_since_reset >= 0.0);
}

TEST_CASE("dr_step rejects bad input") {
  LocationEstimate e;
  CHECK_THROWS(dr_step(e, 0.0, 0.0, 0.0));
  CHECK_THROWS(dr_step(e, std::nan(""), 0.1, 0.0));
}
