#include "roadloc/geo.hpp"

#include <cmath>
#include <stdexcept>

namespace roadloc {

double wrap_degrees(double deg) {
  double w = std::fmod(deg, 360.0);
  if (w < 0.0) w += 360.0;
  if (w >= 360.0) w = 0.0;  // fmod can land exactly on 360 after the add
  return w;
}

double wrap_degrees_180(double deg) {
  double w = std::fmod(deg + 180.0, 360.0);
  if (w < 0.0) w += 360.0;
  return w - 180.0;
}

GeoPoint::GeoPoint(double lat_deg, double lon_deg) {
  if (!std::isfinite(lat_deg) || !std::isfinite(lon_deg))
    throw std::invalid_argument("GeoPoint: non-finite coordinate");
  if (lat_deg < -90.0 || lat_deg > 90.0)
    throw std::invalid_argument("GeoPoint: latitude out of [-90, 90]");
  lat = lat_deg;
  lon = wrap_degrees_180(lon_deg);
}

GeodesicResult vincenty_direct(const GeoPoint& origin, double bearing_deg, double distance_m) {
  if (!std::isfinite(bearing_deg) || !std::isfinite(distance_m))
    throw std::invalid_argument("vincenty_direct: non-finite input");
  if (distance_m < 0.0) throw std::invalid_argument("vincenty_direct: negative distance");
  if (distance_m == 0.0) return {origin, wrap_degrees(bearing_deg)};

  const double a = kWgs84A;
  const double f = kWgs84F;
  const double b = a * (1.0 - f);

  const double phi1 = deg2rad(origin.lat);
  const double alpha1 = deg2rad(bearing_deg);
  const double s = distance_m;

  const double sin_alpha1 = std::sin(alpha1);
  const double cos_alpha1 = std::cos(alpha1);

  const double tan_u1 = (1.0 - f) * std::tan(phi1);
  const double cos_u1 = 1.0 / std::sqrt(1.0 + tan_u1 * tan_u1);
  const double sin_u1 = tan_u1 * cos_u1;

  const double sigma1 = std::atan2(tan_u1, cos_alpha1);
  const double sin_alpha = cos_u1 * sin_alpha1;
  const double cos_sq_alpha = 1.0 - sin_alpha * sin_alpha;
  const double u_sq = cos_sq_alpha * (a * a - b * b) / (b * b);

  const double big_a =
      1.0 + u_sq / 16384.0 * (4096.0 + u_sq * (-768.0 + u_sq * (320.0 - 175.0 * u_sq)));
  const double big_b = u_sq / 1024.0 * (256.0 + u_sq * (-128.0 + u_sq * (74.0 - 47.0 * u_sq)));

  double sigma = s / (b * big_a);
  double cos_2sigma_m = 0.0;
  double sin_sigma = 0.0;
  double cos_sigma = 0.0;

  bool converged = false;
  for (int i = 0; i < 200; ++i) {
    cos_2sigma_m = std::cos(2.0 * sigma1 + sigma);
    sin_sigma = std::sin(sigma);
    cos_sigma = std::cos(sigma);
    const double delta_sigma =
        big_b * sin_sigma *
        (cos_2sigma_m +
         big_b / 4.0 *
             (cos_sigma * (-1.0 + 2.0 * cos_2sigma_m * cos_2sigma_m) -
              big_b / 6.0 * cos_2sigma_m * (-3.0 + 4.0 * sin_sigma * sin_sigma) *
                  (-3.0 + 4.0 * cos_2sigma_m * cos_2sigma_m)));
    const double sigma_next = s / (b * big_a) + delta_sigma;
    const double change = std::abs(sigma_next - sigma);
    sigma = sigma_next;
    if (change < 1e-12) {
      converged = true;
      break;
    }
  }
  if (!converged) throw std::runtime_error("vincenty_direct: no convergence after 200 iterations");

  cos_2sigma_m = std::cos(2.0 * sigma1 + sigma);
  sin_sigma = std::sin(sigma);
  cos_sigma = std::cos(sigma);

  const double tmp = sin_u1 * sin_sigma - cos_u1 * cos_sigma * cos_alpha1;
  const double phi2 = std::atan2(sin_u1 * cos_sigma + cos_u1 * sin_sigma * cos_alpha1,
                                 (1.0 - f) * std::sqrt(sin_alpha * sin_alpha + tmp * tmp));
  const double lambda = std::atan2(sin_sigma * sin_alpha1,
                                   cos_u1 * cos_sigma - sin_u1 * sin_sigma * cos_alpha1);
  const double big_c = f / 16.0 * cos_sq_alpha * (4.0 + f * (4.0 - 3.0 * cos_sq_alpha));
  const double big_l =
      lambda - (1.0 - big_c) * f * sin_alpha *
                   (sigma + big_c * sin_sigma *
                                (cos_2sigma_m +
                                 big_c * cos_sigma * (-1.0 + 2.0 * cos_2sigma_m * cos_2sigma_m)));

  const double lon2 = origin.lon + rad2deg(big_l);
  const double alpha2 = std::atan2(sin_alpha, -tmp);

  GeodesicResult out;
  out.point = GeoPoint(rad2deg(phi2), lon2);
  out.final_bearing_deg = wrap_degrees(rad2deg(alpha2));
  return out;
}

double geo_distance(const GeoPoint& a, const GeoPoint& b) {
  const double phi1 = deg2rad(a.lat);
  const double phi2 = deg2rad(b.lat);
  const double dphi = deg2rad(b.lat - a.lat);
  const double dlam = deg2rad(wrap_degrees_180(b.lon - a.lon));
  const double sp = std::sin(dphi / 2.0);
  const double sl = std::sin(dlam / 2.0);
  const double h = sp * sp + std::cos(phi1) * std::cos(phi2) * sl * sl;
  return 2.0 * kEarthRadius * std::asin(std::min(1.0, std::sqrt(h)));
}

Eigen::Vector2d to_enu(const GeoPoint& p, const GeoPoint& ref) {
  const double east =
      deg2rad(wrap_degrees_180(p.lon - ref.lon)) * kEarthRadius * std::cos(deg2rad(ref.lat));
  const double north = deg2rad(p.lat - ref.lat) * kEarthRadius;
  return {east, north};
}

GeoPoint from_enu(const Eigen::Vector2d& east_north, const GeoPoint& ref) {
  const double dlat = rad2deg(east_north.y() / kEarthRadius);
  const double dlon =
      rad2deg(east_north.x() / (kEarthRadius * std::cos(deg2rad(ref.lat))));
  return GeoPoint(ref.lat + dlat, ref.lon + dlon);
}

}  // namespace roadloc
