#include "roadloc/trace.hpp"

#include <cmath>
#include <set>
#include <stdexcept>

namespace roadloc {

namespace {

void require(bool ok, const char* msg) {
  if (!ok) throw std::invalid_argument(msg);
}

template <typename T>
void check_monotone(const std::vector<T>& seq, const char* what) {
  for (size_t i = 1; i < seq.size(); ++i) {
    if (!(seq[i].t > seq[i - 1].t))
      throw std::invalid_argument(std::string("non-monotone timestamps in ") + what);
  }
}

void check_unique_ids(const CellScan& s) {
  std::set<std::string> seen{s.serving.id};
  for (const auto& n : s.neighbors) {
    if (!seen.insert(n.id).second)
      throw std::invalid_argument("duplicate cell_id within a scan: " + n.id);
  }
}

}  // namespace

void validate(const InertialSample& s) {
  require(std::isfinite(s.t), "inertial sample: non-finite t");
  require(s.linear_accel.allFinite() && s.gravity_accel.allFinite() && s.magnetic.allFinite() &&
              s.orientation.allFinite(),
          "inertial sample: non-finite component");
  require(s.orientation[0] >= 0.0 && s.orientation[0] < 360.0,
          "inertial sample: azimuth outside [0,360)");
}

void validate(const CellScan& s) {
  require(std::isfinite(s.t), "cell scan: non-finite t");
  require(std::isfinite(s.serving.rss) && s.serving.rss >= 0.0, "cell scan: negative rss");
  require(s.neighbors.size() <= 6, "cell scan: more than 6 neighbors");
  for (const auto& n : s.neighbors)
    require(std::isfinite(n.rss) && n.rss >= 0.0, "cell scan: negative rss");
  check_unique_ids(s);
}

void validate(const WifiScan& s) {
  require(std::isfinite(s.t), "wifi scan: non-finite t");
  std::set<std::string> seen;
  for (const auto& ap : s.aps) {
    require(std::isfinite(ap.rss) && ap.rss >= 0.0, "wifi scan: negative rss");
    if (!seen.insert(ap.id).second)
      throw std::invalid_argument("duplicate bssid within a scan: " + ap.id);
  }
}

void validate(const Trace& trace) {
  for (const auto& s : trace.inertial) validate(s);
  for (const auto& s : trace.cells) validate(s);
  for (const auto& s : trace.wifi) validate(s);
  check_monotone(trace.inertial, "inertial stream");
  check_monotone(trace.cells, "cell stream");
  check_monotone(trace.wifi, "wifi stream");
  check_monotone(trace.ground_truth, "ground truth");
  if (!trace.ground_truth.empty() && !trace.inertial.empty()) {
    require(trace.ground_truth.front().t <= trace.inertial.front().t + 1e-9 &&
                trace.ground_truth.back().t >= trace.inertial.back().t - 1e-9,
            "ground truth span does not cover the inertial span");
  }
}

bool is_physical(AnchorClassKind kind) {
  switch (kind) {
    case AnchorClassKind::VirtualCell:
    case AnchorClassKind::VirtualWifi:
    case AnchorClassKind::VirtualScalar:
      return false;
    default:
      return true;
  }
}

const char* to_string(AnchorClassKind kind) {
  switch (kind) {
    case AnchorClassKind::CatsEye: return "CatsEye";
    case AnchorClassKind::Bump: return "Bump";
    case AnchorClassKind::Curve: return "Curve";
    case AnchorClassKind::Turn: return "Turn";
    case AnchorClassKind::RailwayCrossing: return "RailwayCrossing";
    case AnchorClassKind::Bridge: return "Bridge";
    case AnchorClassKind::Tunnel: return "Tunnel";
    case AnchorClassKind::StretchMark: return "StretchMark";
    case AnchorClassKind::VirtualCell: return "VirtualCell";
    case AnchorClassKind::VirtualWifi: return "VirtualWifi";
    case AnchorClassKind::VirtualScalar: return "VirtualScalar";
  }
  return "?";
}

AnchorClassKind anchor_class_kind_from_string(const std::string& s) {
  for (int i = 0; i <= static_cast<int>(AnchorClassKind::VirtualScalar); ++i) {
    const auto k = static_cast<AnchorClassKind>(i);
    if (s == to_string(k)) return k;
  }
  throw std::invalid_argument("unknown anchor class: " + s);
}

std::string to_string(const AnchorClass& cls) {
  std::string out = to_string(cls.kind);
  if (cls.kind == AnchorClassKind::VirtualScalar) {
    out += std::string("(") + to_string(cls.channel) + "," + to_string(cls.feature) + ")";
  }
  return out;
}

namespace {

RssVector sorted_rss(RssVector v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

RssVector rss_vector_from(const CellScan& scan) {
  RssVector v;
  v.reserve(1 + scan.neighbors.size());
  v.emplace_back(scan.serving.id, scan.serving.rss);
  for (const auto& n : scan.neighbors) v.emplace_back(n.id, n.rss);
  return sorted_rss(std::move(v));
}

RssVector rss_vector_from(const WifiScan& scan) {
  RssVector v;
  v.reserve(scan.aps.size());
  for (const auto& ap : scan.aps) v.emplace_back(ap.id, ap.rss);
  return sorted_rss(std::move(v));
}

double rss_similarity(const RssVector& a, const RssVector& b) {
  size_t i = 0, j = 0;
  size_t union_size = 0;
  double sum = 0.0;
  while (i < a.size() || j < b.size()) {
    ++union_size;
    if (j >= b.size() || (i < a.size() && a[i].first < b[j].first)) {
      ++i;  // only in a: min = 0
    } else if (i >= a.size() || b[j].first < a[i].first) {
      ++j;  // only in b
    } else {
      const double lo = std::min(a[i].second, b[j].second);
      const double hi = std::max(a[i].second, b[j].second);
      if (hi > 0.0) sum += lo / hi;
      ++i;
      ++j;
    }
  }
  if (union_size == 0) return 0.0;
  return sum / static_cast<double>(union_size);
}

Anchor make_anchor(std::string id, AnchorClass cls, const GeoPoint& location,
                   double trace_length_m, AnchorSignature signature) {
  Anchor a;
  a.id = std::move(id);
  a.cls = cls;
  a.ref = location;
  a.signature = std::move(signature);
  a.report_count = 0;
  a.weight_sum = 0.0;
  anchor_add_report(a, location, trace_length_m);
  return a;
}

void anchor_add_report(Anchor& anchor, const GeoPoint& location, double trace_length_m) {
  const double w = 1.0 / std::max(1.0, trace_length_m);
  anchor.weighted_enu += w * to_enu(location, anchor.ref);
  anchor.weight_sum += w;
  anchor.report_count += 1;
  anchor.location = from_enu(anchor.weighted_enu / anchor.weight_sum, anchor.ref);
}

}  // namespace roadloc
