#pragma once

#include "roadloc/signal.hpp"

#include <Eigen/Core>

#include <optional>
#include <vector>

namespace roadloc {

/// Epanechnikov kernel K(q) = 3/4 (1 - q^2) on |q| <= 1, else 0.
double epanechnikov(double q);

/// Kernel density estimate over a scalar sample with the bandwidth
/// h = 2.345 * sigma_hat * n^(-0.2).
class Density {
 public:
  /// Throws std::invalid_argument on n < 2 or zero sample deviation
  /// ("degenerate feature stream").
  static Density fit(const Eigen::ArrayXd& values);

  double bandwidth() const { return h_; }
  double support_min() const { return values_[0] - h_; }
  double support_max() const { return values_[values_.size() - 1] + h_; }

  double pdf(double v) const;
  /// Exact piecewise-polynomial CDF of the kernel mixture.
  double cdf(double v) const;
  /// Quantile by bisection on the CDF, to 1e-9 in probability.
  double quantile(double p) const;

 private:
  Eigen::ArrayXd values_;  // sorted
  double h_ = 0.0;
};

/// Critical bounds derived from a fitted density. Central-tendency features
/// get two-sided bounds (alpha/2 in each tail); dispersion features get an
/// upper bound only.
struct Bounds {
  std::optional<double> lower;
  double upper = 0.0;
  double alpha = 0.4;
};

Bounds anomaly_bounds(const Density& density, Tendency tendency, double alpha);

/// Frames whose value falls outside the bounds.
std::vector<FeatureFrame> detect_anomalies(const std::vector<FeatureFrame>& frames,
                                           const Bounds& bounds);

}  // namespace roadloc
