#include "roadloc/signal.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace roadloc {

Tendency tendency_of(FeatureKind kind) {
  return kind == FeatureKind::Variance ? Tendency::Dispersion : Tendency::Central;
}

const char* to_string(FeatureKind kind) {
  switch (kind) {
    case FeatureKind::Mean: return "Mean";
    case FeatureKind::Max: return "Max";
    case FeatureKind::Variance: return "Variance";
    case FeatureKind::Skewness: return "Skewness";
  }
  return "?";
}

FeatureKind feature_kind_from_string(const std::string& s) {
  if (s == "Mean") return FeatureKind::Mean;
  if (s == "Max") return FeatureKind::Max;
  if (s == "Variance") return FeatureKind::Variance;
  if (s == "Skewness") return FeatureKind::Skewness;
  throw std::invalid_argument("unknown feature kind: " + s);
}

const char* to_string(ChannelId id) {
  switch (id) {
    case ChannelId::GravityX: return "gravity-x";
    case ChannelId::GravityY: return "gravity-y";
    case ChannelId::GravityZ: return "gravity-z";
    case ChannelId::MagneticX: return "magnetic-x";
    case ChannelId::MagneticY: return "magnetic-y";
    case ChannelId::MagneticZ: return "magnetic-z";
    case ChannelId::OrientationAzimuth: return "orientation-azimuth";
    case ChannelId::CellRss: return "cell-rss";
  }
  return "?";
}

ChannelId channel_from_string(const std::string& s) {
  for (int i = 0; i < kNumChannels; ++i) {
    const auto id = static_cast<ChannelId>(i);
    if (s == to_string(id)) return id;
  }
  throw std::invalid_argument("unknown channel: " + s);
}

namespace {

double tricube(double u) {
  const double a = 1.0 - u * u * u;
  return a * a * a;
}

}  // namespace

Eigen::ArrayXd lowess_smooth(const Eigen::ArrayXd& t, const Eigen::ArrayXd& v,
                             double span_fraction) {
  const Eigen::Index n = t.size();
  if (n != v.size()) throw std::invalid_argument("lowess_smooth: size mismatch");
  if (n < 2) throw std::invalid_argument("lowess_smooth: series shorter than 2");
  if (!(span_fraction > 0.0 && span_fraction <= 1.0))
    throw std::invalid_argument("lowess_smooth: span_fraction outside (0,1]");
  const Eigen::Index k =
      static_cast<Eigen::Index>(std::ceil(span_fraction * static_cast<double>(n)));
  if (k < 2) throw std::invalid_argument("lowess_smooth: span yields fewer than 2 neighbors");

  const double range = t[n - 1] - t[0];
  Eigen::ArrayXd out(n);
  Eigen::Index left = 0;
  for (Eigen::Index i = 0; i < n; ++i) {
    // Slide the k-wide neighbor window right while that shrinks its radius.
    while (left + k <= n - 1 && t[i] - t[left] > t[left + k] - t[i]) ++left;
    const Eigen::Index right = left + k - 1;

    const double h = std::max(t[i] - t[left], t[right] - t[i]);
    double wsum = 0.0, xw = 0.0, yw = 0.0;
    Eigen::ArrayXd w(k);
    for (Eigen::Index j = 0; j < k; ++j) {
      const double r = std::abs(t[left + j] - t[i]);
      double wj;
      if (h <= 0.0) {
        wj = 1.0;
      } else {
        const double u = r / h;
        wj = u >= 1.0 ? 0.0 : tricube(u);
      }
      w[j] = wj;
      wsum += wj;
      xw += wj * t[left + j];
      yw += wj * v[left + j];
    }
    if (wsum <= 0.0) {
      out[i] = v[i];
      continue;
    }
    const double xbar = xw / wsum;
    const double ybar = yw / wsum;
    double sxx = 0.0, sxy = 0.0;
    for (Eigen::Index j = 0; j < k; ++j) {
      const double dx = t[left + j] - xbar;
      sxx += w[j] * dx * dx;
      sxy += w[j] * dx * (v[left + j] - ybar);
    }
    if (std::sqrt(std::max(0.0, sxx / wsum)) > 1e-9 * std::max(range, 1e-300)) {
      out[i] = ybar + sxy / sxx * (t[i] - xbar);
    } else {
      out[i] = ybar;  // samples too concentrated for a slope
    }
  }
  return out;
}

WindowStats window_stats(const Eigen::ArrayXd& values) {
  WindowStats s;
  const Eigen::Index n = values.size();
  if (n == 0) return s;
  s.mean = values.mean();
  s.max = values.maxCoeff();
  if (n >= 2) {
    const Eigen::ArrayXd d = values - s.mean;
    const double ss = (d * d).sum();
    s.variance = ss / static_cast<double>(n - 1);
    if (n >= 3 && s.variance > 1e-24) {
      const double m3 = (d * d * d).sum() / static_cast<double>(n);
      const double sd = std::sqrt(s.variance);
      const double nd = static_cast<double>(n);
      s.skewness = nd * nd / ((nd - 1.0) * (nd - 2.0)) * m3 / (sd * sd * sd);
    }
  }
  return s;
}

double feature_value(const WindowStats& s, FeatureKind kind) {
  switch (kind) {
    case FeatureKind::Mean: return s.mean;
    case FeatureKind::Max: return s.max;
    case FeatureKind::Variance: return s.variance;
    case FeatureKind::Skewness: return s.skewness;
  }
  return 0.0;
}

std::vector<WindowSpan> window_spans(const Eigen::ArrayXd& t, double window_seconds,
                                     double overlap_fraction) {
  if (t.size() == 0) throw std::invalid_argument("window_spans: empty series");
  if (!(window_seconds > 0.0)) throw std::invalid_argument("window_spans: window_seconds <= 0");
  if (!(overlap_fraction >= 0.0 && overlap_fraction < 1.0))
    throw std::invalid_argument("window_spans: overlap_fraction outside [0,1)");

  const Eigen::Index n = t.size();
  const double stride = window_seconds * (1.0 - overlap_fraction);

  // Median sample spacing: the last window may extend up to one sample
  // past the final timestamp and still count as complete.
  double dt = 0.0;
  if (n >= 2) {
    std::vector<double> diffs(n - 1);
    for (Eigen::Index i = 0; i + 1 < n; ++i) diffs[i] = t[i + 1] - t[i];
    std::nth_element(diffs.begin(), diffs.begin() + diffs.size() / 2, diffs.end());
    dt = diffs[diffs.size() / 2];
  }

  std::vector<WindowSpan> spans;
  Eigen::Index begin = 0;
  for (int k = 0;; ++k) {
    const double start = t[0] + k * stride;
    const double end = start + window_seconds;
    if (end > t[n - 1] + dt + 1e-9) break;
    while (begin < n && t[begin] < start - 1e-12) ++begin;
    Eigen::Index e = begin;
    while (e < n && t[e] < end - 1e-12) ++e;
    if (e > begin) {
      WindowSpan span;
      span.start_t = start;
      span.index = k;
      span.begin = begin;
      span.end = e;
      spans.push_back(span);
    }
  }
  return spans;
}

std::vector<FeatureFrame> window_features(const Eigen::ArrayXd& t, const Eigen::ArrayXd& v,
                                          double window_seconds, double overlap_fraction,
                                          const std::vector<FeatureKind>& kinds,
                                          ChannelId channel) {
  if (t.size() != v.size()) throw std::invalid_argument("window_features: size mismatch");
  const auto spans = window_spans(t, window_seconds, overlap_fraction);
  std::vector<FeatureFrame> frames;
  frames.reserve(spans.size() * kinds.size());
  for (const auto& span : spans) {
    const WindowStats s = window_stats(v.segment(span.begin, span.end - span.begin));
    for (FeatureKind kind : kinds) {
      FeatureFrame f;
      f.window_start_t = span.start_t;
      f.window_index = span.index;
      f.channel = channel;
      f.kind = kind;
      f.value = feature_value(s, kind);
      frames.push_back(f);
    }
  }
  return frames;
}

Eigen::ArrayXd unwrap_degrees(const Eigen::ArrayXd& wrapped_deg) {
  Eigen::ArrayXd out(wrapped_deg.size());
  if (wrapped_deg.size() == 0) return out;
  out[0] = wrapped_deg[0];
  for (Eigen::Index i = 1; i < wrapped_deg.size(); ++i) {
    double delta = std::fmod(wrapped_deg[i] - wrapped_deg[i - 1] + 180.0, 360.0);
    if (delta < 0.0) delta += 360.0;
    out[i] = out[i - 1] + delta - 180.0;
  }
  return out;
}

Eigen::ArrayXd locf_resample(const Eigen::ArrayXd& src_t, const Eigen::ArrayXd& src_v,
                             const Eigen::ArrayXd& target_t) {
  if (src_t.size() == 0) throw std::invalid_argument("locf_resample: empty source");
  Eigen::ArrayXd out(target_t.size());
  Eigen::Index j = 0;
  for (Eigen::Index i = 0; i < target_t.size(); ++i) {
    while (j + 1 < src_t.size() && src_t[j + 1] <= target_t[i]) ++j;
    out[i] = src_t[j] <= target_t[i] ? src_v[j] : src_v[0];
  }
  return out;
}

}  // namespace roadloc
