#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "roadloc/geo.hpp"
#include "support/geodesic_oracle.hpp"

#include <cmath>
#include <random>

using namespace roadloc;

TEST_CASE("GeoPoint normalizes longitude and rejects bad latitude") {
  GeoPoint p(10.0, 190.0);
  CHECK(p.lon == doctest::Approx(-170.0));
  GeoPoint q(0.0, -180.0);
  CHECK(q.lon == doctest::Approx(-180.0));
  GeoPoint r(0.0, 180.0);
  CHECK(r.lon == doctest::Approx(-180.0));
  CHECK_THROWS(GeoPoint(91.0, 0.0));
  CHECK_THROWS(GeoPoint(std::nan(""), 0.0));
}

TEST_CASE("vincenty_direct: zero distance is identity") {
  GeoPoint p(31.2, 29.95);
  auto r = vincenty_direct(p, 37.0, 0.0);
  CHECK(r.point.lat == p.lat);
  CHECK(r.point.lon == p.lon);
  CHECK(r.final_bearing_deg == doctest::Approx(37.0));
}

TEST_CASE("vincenty_direct: equatorial eastward motion stays on the equator") {
  auto r = vincenty_direct(GeoPoint(0.0, 0.0), 90.0, 1000.0);
  CHECK(std::abs(r.point.lat) < 1e-9);
  CHECK(r.point.lon > 0.0);
}

TEST_CASE("vincenty_direct matches the RK4 geodesic oracle") {
  auto r = vincenty_direct(GeoPoint(0.0, 0.0), 0.0, 10000.0);
  GeoPoint oracle = roadloc::testing::geodesic_rk4(GeoPoint(0.0, 0.0), 0.0, 10000.0);
  CHECK(geo_distance(r.point, oracle) < 1e-3);

  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> lat(-80.0, 80.0);
  std::uniform_real_distribution<double> lon(-180.0, 180.0);
  std::uniform_real_distribution<double> brg(0.0, 360.0);
  std::uniform_real_distribution<double> dist(1.0, 100000.0);
  for (int i = 0; i < 50; ++i) {
    GeoPoint origin(lat(rng), lon(rng));
    const double b = brg(rng);
    const double d = dist(rng);
    auto got = vincenty_direct(origin, b, d);
    GeoPoint want = roadloc::testing::geodesic_rk4(origin, b, d);
    CHECK(geo_distance(got.point, want) < 1e-3);
  }
}

TEST_CASE("vincenty_direct is additive when the forward azimuth is propagated") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> lat(-70.0, 70.0);
  std::uniform_real_distribution<double> lon(-180.0, 180.0);
  std::uniform_real_distribution<double> brg(0.0, 360.0);
  std::uniform_real_distribution<double> dist(1.0, 5000.0);
  for (int i = 0; i < 40; ++i) {
    GeoPoint origin(lat(rng), lon(rng));
    const double b = brg(rng);
    const double d1 = dist(rng);
    const double d2 = dist(rng);
    auto whole = vincenty_direct(origin, b, d1 + d2);
    auto first = vincenty_direct(origin, b, d1);
    auto second = vincenty_direct(first.point, first.final_bearing_deg, d2);
    CHECK(geo_distance(whole.point, second.point) < 1e-3);
  }
}

TEST_CASE("geo_distance basics") {
  GeoPoint a(31.2, 29.95);
  CHECK(geo_distance(a, a) == 0.0);

  // One degree of longitude along the equator: 2*pi*R/360.
  CHECK(std::abs(geo_distance(GeoPoint(0, 0), GeoPoint(0, 1)) - 111194.93) < 0.01);

  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> lat(-89.0, 89.0);
  std::uniform_real_distribution<double> lon(-180.0, 180.0);
  for (int i = 0; i < 100; ++i) {
    GeoPoint p(lat(rng), lon(rng));
    GeoPoint q(lat(rng), lon(rng));
    CHECK(geo_distance(p, q) == doctest::Approx(geo_distance(q, p)));
  }
}

TEST_CASE("to_enu/from_enu round trip") {
  GeoPoint ref(31.2, 29.95);
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> off(-2000.0, 2000.0);
  for (int i = 0; i < 50; ++i) {
    Eigen::Vector2d en(off(rng), off(rng));
    GeoPoint p = from_enu(en, ref);
    Eigen::Vector2d back = to_enu(p, ref);
    CHECK((back - en).norm() < 1e-6);
  }
}

TEST_CASE("wrap helpers") {
  CHECK(wrap_degrees(360.0) == 0.0);
  CHECK(wrap_degrees(-10.0) == doctest::Approx(350.0));
  CHECK(wrap_degrees_180(179.0) == doctest::Approx(179.0));
  CHECK(wrap_degrees_180(181.0) == doctest::Approx(-179.0));
  CHECK(wrap_degrees_180(-180.0) == doctest::Approx(-180.0));
}
