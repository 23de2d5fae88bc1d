#pragma once

#include <Eigen/Core>

#include <cstdint>
#include <string>
#include <vector>

namespace roadloc {

enum class FeatureKind : uint8_t { Mean, Max, Variance, Skewness };
enum class Tendency : uint8_t { Central, Dispersion };

/// Variance is the only one-sided (dispersion) feature; mean, max and
/// skewness deviate in both directions.
Tendency tendency_of(FeatureKind kind);

const char* to_string(FeatureKind kind);
FeatureKind feature_kind_from_string(const std::string& s);

/// Scalar channels derived from a trace before windowing.
enum class ChannelId : uint8_t {
  GravityX,
  GravityY,
  GravityZ,
  MagneticX,
  MagneticY,
  MagneticZ,
  OrientationAzimuth,  // unwrapped degrees
  CellRss,             // mean of serving + neighbor strengths
};

inline constexpr int kNumChannels = 8;
inline constexpr int kNumFeatureKinds = 4;

const char* to_string(ChannelId id);
ChannelId channel_from_string(const std::string& s);

struct FeatureFrame {
  double window_start_t = 0.0;
  int window_index = 0;
  ChannelId channel = ChannelId::GravityX;
  FeatureKind kind = FeatureKind::Mean;
  double value = 0.0;
};

/// Locally weighted linear regression (tricube weights, one pass) evaluated
/// at every sample. The fit at sample i uses the ceil(span_fraction*n)
/// nearest neighbors in time. Throws on series shorter than 2 or when the
/// span yields fewer than 2 neighbors.
Eigen::ArrayXd lowess_smooth(const Eigen::ArrayXd& t, const Eigen::ArrayXd& v,
                             double span_fraction);

/// Sample statistics of one window of values.
struct WindowStats {
  double mean = 0.0;
  double max = 0.0;
  double variance = 0.0;  // sample variance, divisor n-1; 0 for n < 2
  double skewness = 0.0;  // adjusted Fisher-Pearson; 0 when variance = 0 or n < 3
};

WindowStats window_stats(const Eigen::ArrayXd& values);

double feature_value(const WindowStats& s, FeatureKind kind);

/// Index range [begin, end) of consecutive samples plus the window start time.
struct WindowSpan {
  double start_t = 0.0;
  int index = 0;
  Eigen::Index begin = 0;
  Eigen::Index end = 0;
};

/// Sliding windows of width window_seconds advancing by
/// window_seconds*(1-overlap_fraction). The partial trailing window is
/// dropped: a window is kept only if it ends within one median sample
/// spacing of the last sample. Throws on an empty series.
std::vector<WindowSpan> window_spans(const Eigen::ArrayXd& t, double window_seconds,
                                     double overlap_fraction);

/// One frame per (window, kind).
std::vector<FeatureFrame> window_features(const Eigen::ArrayXd& t, const Eigen::ArrayXd& v,
                                          double window_seconds, double overlap_fraction,
                                          const std::vector<FeatureKind>& kinds,
                                          ChannelId channel);

/// Unwraps a [0,360) degree series into a continuous one.
Eigen::ArrayXd unwrap_degrees(const Eigen::ArrayXd& wrapped_deg);

/// Last-observation-carried-forward resampling of (src_t, src_v) onto
/// target_t. Targets before the first source take the first source value.
Eigen::ArrayXd locf_resample(const Eigen::ArrayXd& src_t, const Eigen::ArrayXd& src_v,
                             const Eigen::ArrayXd& target_t);

}  // namespace roadloc
