#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "roadloc/kde.hpp"

#include <algorithm>
#include <cmath>
#include <random>

using namespace roadloc;

namespace {

Eigen::ArrayXd normal_sample(int n, unsigned seed, double mean = 0.0, double sd = 1.0) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> g(mean, sd);
  Eigen::ArrayXd v(n);
  for (int i = 0; i < n; ++i) v[i] = g(rng);
  return v;
}

double simpson_integral(const Density& d) {
  const int n = 20000;  // even
  const double a = d.support_min();
  const double b = d.support_max();
  const double h = (b - a) / n;
  double sum = d.pdf(a) + d.pdf(b);
  for (int i = 1; i < n; ++i) sum += d.pdf(a + i * h) * (i % 2 == 0 ? 2.0 : 4.0);
  return sum * h / 3.0;
}

double empirical_quantile(Eigen::ArrayXd v, double p) {
  std::sort(v.data(), v.data() + v.size());
  const auto idx = static_cast<Eigen::Index>(std::ceil(p * v.size())) - 1;
  return v[std::clamp<Eigen::Index>(idx, 0, v.size() - 1)];
}

}  // namespace

TEST_CASE("kernel boundary values") {
  CHECK(epanechnikov(0.0) == doctest::Approx(0.75));
  CHECK(epanechnikov(1.0) == doctest::Approx(0.0));
  CHECK(epanechnikov(-1.0) == doctest::Approx(0.0));
  CHECK(epanechnikov(2.0) == 0.0);
}

TEST_CASE("bandwidth follows the Scott-style rule") {
  // 100 values with sample standard deviation exactly 1.
  Eigen::ArrayXd v(100);
  const double a = std::sqrt(99.0 / 100.0);
  for (int i = 0; i < 100; ++i) v[i] = i < 50 ? -a : a;
  Density d = Density::fit(v);
  const double expected = 2.345 * std::pow(100.0, -0.2);
  CHECK(std::abs(d.bandwidth() - expected) < 1e-12);
  CHECK(std::abs(d.bandwidth() - 0.933561) < 1e-5);
}

TEST_CASE("degenerate streams are rejected") {
  Eigen::ArrayXd one(1);
  one << 3.0;
  CHECK_THROWS_WITH_AS(Density::fit(one), doctest::Contains("degenerate"), std::invalid_argument);
  Eigen::ArrayXd flat = Eigen::ArrayXd::Constant(10, 2.0);
  CHECK_THROWS_WITH_AS(Density::fit(flat), doctest::Contains("degenerate"), std::invalid_argument);
}

TEST_CASE("fitted density integrates to one and is non-negative") {
  for (unsigned seed : {1u, 2u}) {
    Density d = Density::fit(normal_sample(400, seed));
    CHECK(std::abs(simpson_integral(d) - 1.0) < 1e-6);
    CHECK(d.pdf(d.support_min() - 0.1) == 0.0);
    CHECK(d.pdf(d.support_max() + 0.1) == 0.0);
    std::mt19937_64 rng(seed + 10);
    std::uniform_real_distribution<double> u(d.support_min(), d.support_max());
    for (int i = 0; i < 200; ++i) CHECK(d.pdf(u(rng)) >= 0.0);
  }
}

TEST_CASE("quantile inversion is exact to 1e-9 in probability") {
  Density d = Density::fit(normal_sample(500, 3));
  for (double p = 0.02; p < 1.0; p += 0.02) {
    CHECK(std::abs(d.cdf(d.quantile(p)) - p) < 1e-9);
  }
}

TEST_CASE("symmetric samples give symmetric central bounds") {
  Eigen::ArrayXd v(200);
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> u(0.1, 3.0);
  for (int i = 0; i < 100; ++i) {
    const double x = u(rng);
    v[2 * i] = x;
    v[2 * i + 1] = -x;
  }
  Bounds b = anomaly_bounds(Density::fit(v), Tendency::Central, 0.4);
  REQUIRE(b.lower.has_value());
  CHECK(std::abs(*b.lower + b.upper) < 1e-6);
}

TEST_CASE("dispersion bound tracks the empirical quantile on uniform data") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  Eigen::ArrayXd v(10000);
  for (int i = 0; i < 10000; ++i) v[i] = u(rng);
  Bounds b = anomaly_bounds(Density::fit(v), Tendency::Dispersion, 0.4);
  CHECK(!b.lower.has_value());
  CHECK(std::abs(b.upper - empirical_quantile(v, 0.6)) < 0.02);
}

TEST_CASE("upper bound is monotone in alpha") {
  Density d = Density::fit(normal_sample(1000, 6));
  double prev = std::numeric_limits<double>::infinity();
  for (double alpha : {0.1, 0.2, 0.4, 0.6, 0.8, 0.95}) {
    const double upper = anomaly_bounds(d, Tendency::Dispersion, alpha).upper;
    CHECK(upper < prev);
    prev = upper;
  }
}

TEST_CASE("detect_anomalies flags exactly the out-of-bounds frames") {
  Eigen::ArrayXd v = normal_sample(500, 7);
  Density d = Density::fit(v);
  Bounds b = anomaly_bounds(d, Tendency::Central, 0.4);

  const double median = d.quantile(0.5);
  std::vector<FeatureFrame> frames;
  for (int i = 0; i < 20; ++i)
    frames.push_back({static_cast<double>(i), i, ChannelId::GravityY, FeatureKind::Mean, median});
  CHECK(detect_anomalies(frames, b).empty());

  FeatureFrame spike{99.0, 99, ChannelId::GravityY, FeatureKind::Mean, b.upper + 1.0};
  frames.push_back(spike);
  auto flagged = detect_anomalies(frames, b);
  REQUIRE(flagged.size() == 1);
  CHECK(flagged[0].window_index == 99);
}

TEST_CASE("flagged fraction approximates alpha on large streams") {
  const int n = 5000;
  Eigen::ArrayXd v = normal_sample(n, 8);
  Density d = Density::fit(v);

  for (Tendency tendency : {Tendency::Central, Tendency::Dispersion}) {
    Bounds b = anomaly_bounds(d, tendency, 0.4);
    std::vector<FeatureFrame> frames;
    frames.reserve(n);
    for (int i = 0; i < n; ++i)
      frames.push_back({static_cast<double>(i), i, ChannelId::GravityY,
                        tendency == Tendency::Central ? FeatureKind::Mean : FeatureKind::Variance,
                        v[i]});
    const double fraction =
        static_cast<double>(detect_anomalies(frames, b).size()) / static_cast<double>(n);
    CHECK(std::abs(fraction - 0.4) < 0.05);
  }
}
