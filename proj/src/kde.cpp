#include "roadloc/kde.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace roadloc {

double epanechnikov(double q) {
  if (std::abs(q) > 1.0) return 0.0;
  return 0.75 * (1.0 - q * q);
}

Density Density::fit(const Eigen::ArrayXd& values) {
  const Eigen::Index n = values.size();
  if (n < 2) throw std::invalid_argument("degenerate feature stream: fewer than 2 samples");
  const double mean = values.mean();
  const double var = ((values - mean) * (values - mean)).sum() / static_cast<double>(n - 1);
  const double sigma = std::sqrt(var);
  if (!(sigma > 0.0)) throw std::invalid_argument("degenerate feature stream: zero deviation");

  Density d;
  d.values_ = values;
  std::sort(d.values_.data(), d.values_.data() + n);
  d.h_ = 2.345 * sigma * std::pow(static_cast<double>(n), -0.2);
  return d;
}

double Density::pdf(double v) const {
  const Eigen::Index n = values_.size();
  // Only samples within one bandwidth contribute; the array is sorted.
  const double* begin = values_.data();
  const double* end = begin + n;
  const double* lo = std::lower_bound(begin, end, v - h_);
  const double* hi = std::upper_bound(begin, end, v + h_);
  double sum = 0.0;
  for (const double* p = lo; p != hi; ++p) sum += epanechnikov((v - *p) / h_);
  return sum / (static_cast<double>(n) * h_);
}

double Density::cdf(double v) const {
  const Eigen::Index n = values_.size();
  const double* begin = values_.data();
  const double* end = begin + n;
  const double* lo = std::lower_bound(begin, end, v - h_);
  const double* hi = std::upper_bound(begin, end, v + h_);
  // Samples fully below the evaluation point contribute 1 each.
  double sum = static_cast<double>(lo - begin);
  for (const double* p = lo; p != hi; ++p) {
    const double q = (v - *p) / h_;
    if (q >= 1.0) {
      sum += 1.0;
    } else if (q > -1.0) {
      // Integral of the Epanechnikov kernel from -1 to q.
      sum += (2.0 + 3.0 * q - q * q * q) / 4.0;
    }
  }
  return sum / static_cast<double>(n);
}

double Density::quantile(double p) const {
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("quantile: p outside [0,1]");
  double lo = support_min();
  double hi = support_max();
  double mid = 0.5 * (lo + hi);
  for (int i = 0; i < 200; ++i) {
    mid = 0.5 * (lo + hi);
    const double c = cdf(mid);
    if (std::abs(c - p) <= 1e-12) break;
    if (c < p)
      lo = mid;
    else
      hi = mid;
  }
  return mid;
}

Bounds anomaly_bounds(const Density& density, Tendency tendency, double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0)) throw std::invalid_argument("anomaly_bounds: alpha outside (0,1)");
  Bounds b;
  b.alpha = alpha;
  if (tendency == Tendency::Central) {
    b.lower = density.quantile(alpha / 2.0);
    b.upper = density.quantile(1.0 - alpha / 2.0);
  } else {
    b.lower.reset();
    b.upper = density.quantile(1.0 - alpha);
  }
  return b;
}

std::vector<FeatureFrame> detect_anomalies(const std::vector<FeatureFrame>& frames,
                                           const Bounds& bounds) {
  std::vector<FeatureFrame> out;
  for (const auto& f : frames) {
    if (f.value > bounds.upper || (bounds.lower && f.value < *bounds.lower)) out.push_back(f);
  }
  return out;
}

}  // namespace roadloc
