#include "roadloc/trace_io.hpp"

#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace roadloc {

using nlohmann::json;

namespace {

[[noreturn]] void fail(size_t line_no, const std::string& what) {
  throw ParseError("line " + std::to_string(line_no) + ": " + what);
}

json parse_line(const std::string& line, size_t line_no) {
  try {
    return json::parse(line);
  } catch (const json::exception& e) {
    fail(line_no, std::string("malformed line: ") + e.what());
  }
}

double get_num(const json& j, const char* key, size_t line_no) {
  if (!j.contains(key) || !j[key].is_number()) fail(line_no, std::string("missing numeric field '") + key + "'");
  return j[key].get<double>();
}

std::string get_str(const json& j, const char* key, size_t line_no) {
  if (!j.contains(key) || !j[key].is_string()) fail(line_no, std::string("missing string field '") + key + "'");
  return j[key].get<std::string>();
}

Eigen::Vector3d get_vec3(const json& j, const char* key, size_t line_no) {
  if (!j.contains(key) || !j[key].is_array() || j[key].size() != 3)
    fail(line_no, std::string("field '") + key + "' must be a 3-element array");
  Eigen::Vector3d v;
  for (int i = 0; i < 3; ++i) {
    if (!j[key][i].is_number()) fail(line_no, std::string("field '") + key + "' must be numeric");
    v[i] = j[key][i].get<double>();
  }
  return v;
}

json vec3_to_json(const Eigen::Vector3d& v) { return json::array({v[0], v[1], v[2]}); }

RssReading parse_reading(const json& j, const char* id_key, size_t line_no) {
  RssReading r;
  r.id = get_str(j, id_key, line_no);
  r.rss = get_num(j, "rss", line_no);
  return r;
}

void check_monotone_line(double t, double& last_t, bool& have_last, size_t line_no) {
  if (have_last && !(t > last_t)) fail(line_no, "non-monotone timestamps");
  last_t = t;
  have_last = true;
}

}  // namespace

Trace parse_trace(std::istream& in) {
  Trace trace;
  std::string line;
  size_t line_no = 0;
  bool have_header = false;
  double last_inertial = 0, last_cell = 0, last_wifi = 0, last_truth = 0;
  bool seen_inertial = false, seen_cell = false, seen_wifi = false, seen_truth = false;

  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    const json j = parse_line(line, line_no);
    const std::string type = get_str(j, "type", line_no);

    if (!have_header) {
      if (type != "header") throw ParseError("missing start pose (first record must be the header)");
      trace.id = j.contains("id") && j["id"].is_string() ? j["id"].get<std::string>()
                                                         : std::to_string(get_num(j, "id", line_no));
      try {
        trace.start.point = GeoPoint(get_num(j, "start_lat", line_no), get_num(j, "start_lon", line_no));
      } catch (const std::invalid_argument& e) {
        fail(line_no, e.what());
      }
      trace.start.heading_deg = get_num(j, "start_heading", line_no);
      have_header = true;
      continue;
    }

    try {
      if (type == "inertial") {
        InertialSample s;
        s.t = get_num(j, "t", line_no);
        s.linear_accel = get_vec3(j, "linear_accel", line_no);
        s.gravity_accel = get_vec3(j, "gravity_accel", line_no);
        s.magnetic = get_vec3(j, "magnetic", line_no);
        s.orientation = get_vec3(j, "orientation", line_no);
        validate(s);
        check_monotone_line(s.t, last_inertial, seen_inertial, line_no);
        trace.inertial.push_back(std::move(s));
      } else if (type == "cell") {
        CellScan s;
        s.t = get_num(j, "t", line_no);
        if (!j.contains("serving")) fail(line_no, "missing field 'serving'");
        s.serving = parse_reading(j["serving"], "cell_id", line_no);
        if (j.contains("neighbors")) {
          for (const auto& nj : j["neighbors"]) s.neighbors.push_back(parse_reading(nj, "cell_id", line_no));
        }
        validate(s);
        check_monotone_line(s.t, last_cell, seen_cell, line_no);
        trace.cells.push_back(std::move(s));
      } else if (type == "wifi") {
        WifiScan s;
        s.t = get_num(j, "t", line_no);
        if (j.contains("aps")) {
          for (const auto& aj : j["aps"]) s.aps.push_back(parse_reading(aj, "bssid", line_no));
        }
        validate(s);
        check_monotone_line(s.t, last_wifi, seen_wifi, line_no);
        trace.wifi.push_back(std::move(s));
      } else if (type == "truth") {
        TruthPoint p;
        p.t = get_num(j, "t", line_no);
        p.point = GeoPoint(get_num(j, "lat", line_no), get_num(j, "lon", line_no));
        check_monotone_line(p.t, last_truth, seen_truth, line_no);
        trace.ground_truth.push_back(p);
      } else if (type == "header") {
        fail(line_no, "duplicate header");
      } else {
        fail(line_no, "unknown record type '" + type + "'");
      }
    } catch (const std::invalid_argument& e) {
      fail(line_no, e.what());
    }
  }

  if (!have_header) throw ParseError("missing start pose (empty stream)");
  try {
    validate(trace);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
  return trace;
}

void save_trace(const Trace& trace, std::ostream& out) {
  json header{{"type", "header"},
              {"id", trace.id},
              {"start_lat", trace.start.point.lat},
              {"start_lon", trace.start.point.lon},
              {"start_heading", trace.start.heading_deg}};
  out << header.dump() << '\n';

  // Merge the four streams by time; ties resolve inertial, cell, wifi, truth.
  size_t ii = 0, ci = 0, wi = 0, ti = 0;
  auto next_t = [&](size_t idx, const auto& seq) {
    return idx < seq.size() ? seq[idx].t : std::numeric_limits<double>::infinity();
  };
  while (true) {
    const double t_in = next_t(ii, trace.inertial);
    const double t_ce = next_t(ci, trace.cells);
    const double t_wf = next_t(wi, trace.wifi);
    const double t_tr = next_t(ti, trace.ground_truth);
    const double t = std::min({t_in, t_ce, t_wf, t_tr});
    if (!std::isfinite(t)) break;
    if (t == t_in) {
      const auto& s = trace.inertial[ii++];
      json j{{"type", "inertial"},
             {"t", s.t},
             {"linear_accel", vec3_to_json(s.linear_accel)},
             {"gravity_accel", vec3_to_json(s.gravity_accel)},
             {"magnetic", vec3_to_json(s.magnetic)},
             {"orientation", vec3_to_json(s.orientation)}};
      out << j.dump() << '\n';
    } else if (t == t_ce) {
      const auto& s = trace.cells[ci++];
      json neighbors = json::array();
      for (const auto& n : s.neighbors) neighbors.push_back({{"cell_id", n.id}, {"rss", n.rss}});
      json j{{"type", "cell"},
             {"t", s.t},
             {"serving", {{"cell_id", s.serving.id}, {"rss", s.serving.rss}}},
             {"neighbors", neighbors}};
      out << j.dump() << '\n';
    } else if (t == t_wf) {
      const auto& s = trace.wifi[wi++];
      json aps = json::array();
      for (const auto& ap : s.aps) aps.push_back({{"bssid", ap.id}, {"rss", ap.rss}});
      json j{{"type", "wifi"}, {"t", s.t}, {"aps", aps}};
      out << j.dump() << '\n';
    } else {
      const auto& p = trace.ground_truth[ti++];
      json j{{"type", "truth"}, {"t", p.t}, {"lat", p.point.lat}, {"lon", p.point.lon}};
      out << j.dump() << '\n';
    }
  }
}

namespace {

json signature_to_json(const AnchorSignature& sig) {
  if (std::holds_alternative<RssVector>(sig)) {
    const auto& v = std::get<RssVector>(sig);
    json ids = json::array();
    json values = json::array();
    for (const auto& [id, rss] : v) {
      ids.push_back(id);
      values.push_back(rss);
    }
    return json{{"kind", "rss"}, {"ids", ids}, {"values", values}};
  }
  if (std::holds_alternative<ScalarSignature>(sig)) {
    const auto& s = std::get<ScalarSignature>(sig);
    auto arr = [](const Eigen::Vector4d& v) { return json::array({v[0], v[1], v[2], v[3]}); };
    return json{{"kind", "scalar"},
                {"centroid", arr(s.centroid)},
                {"scale_min", arr(s.scale_min)},
                {"scale_max", arr(s.scale_max)}};
  }
  return json{{"kind", "none"}};
}

AnchorSignature signature_from_json(const json& j, size_t line_no) {
  const std::string kind = get_str(j, "kind", line_no);
  if (kind == "none") return std::monostate{};
  if (kind == "rss") {
    RssVector v;
    for (size_t i = 0; i < j["ids"].size(); ++i)
      v.emplace_back(j["ids"][i].get<std::string>(), j["values"][i].get<double>());
    return v;
  }
  if (kind == "scalar") {
    ScalarSignature s;
    for (int i = 0; i < 4; ++i) {
      s.centroid[i] = j["centroid"][i].get<double>();
      s.scale_min[i] = j["scale_min"][i].get<double>();
      s.scale_max[i] = j["scale_max"][i].get<double>();
    }
    return s;
  }
  fail(line_no, "unknown signature kind '" + kind + "'");
}

}  // namespace

void save_anchors(const std::vector<Anchor>& anchors, std::ostream& out) {
  out << json{{"type", "anchordb"}, {"version", 1}}.dump() << '\n';
  for (const auto& a : anchors) {
    json j{{"type", "anchor"},
           {"id", a.id},
           {"class", std::string(to_string(a.cls.kind))},
           {"lat", a.location.lat},
           {"lon", a.location.lon},
           {"report_count", a.report_count},
           {"weight_sum", a.weight_sum},
           {"ref_lat", a.ref.lat},
           {"ref_lon", a.ref.lon},
           {"acc_e", a.weighted_enu[0]},
           {"acc_n", a.weighted_enu[1]},
           {"signature", signature_to_json(a.signature)}};
    if (a.cls.kind == AnchorClassKind::VirtualScalar) {
      j["channel"] = to_string(a.cls.channel);
      j["feature"] = to_string(a.cls.feature);
    }
    out << j.dump() << '\n';
  }
}

std::vector<Anchor> load_anchors(std::istream& in) {
  std::vector<Anchor> anchors;
  std::string line;
  size_t line_no = 0;
  bool have_header = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    const json j = parse_line(line, line_no);
    const std::string type = get_str(j, "type", line_no);
    if (!have_header) {
      if (type != "anchordb") fail(line_no, "missing anchor db header");
      const int version = static_cast<int>(get_num(j, "version", line_no));
      if (version != 1) fail(line_no, "unsupported anchor db version " + std::to_string(version));
      have_header = true;
      continue;
    }
    if (type != "anchor") fail(line_no, "unknown record type '" + type + "'");
    Anchor a;
    a.id = get_str(j, "id", line_no);
    try {
      a.cls.kind = anchor_class_kind_from_string(get_str(j, "class", line_no));
      if (a.cls.kind == AnchorClassKind::VirtualScalar) {
        a.cls.channel = channel_from_string(get_str(j, "channel", line_no));
        a.cls.feature = feature_kind_from_string(get_str(j, "feature", line_no));
      }
      a.location = GeoPoint(get_num(j, "lat", line_no), get_num(j, "lon", line_no));
      a.ref = GeoPoint(get_num(j, "ref_lat", line_no), get_num(j, "ref_lon", line_no));
    } catch (const std::invalid_argument& e) {
      fail(line_no, e.what());
    }
    a.report_count = static_cast<int>(get_num(j, "report_count", line_no));
    if (a.report_count < 1) fail(line_no, "report_count < 1");
    a.weight_sum = get_num(j, "weight_sum", line_no);
    if (!(a.weight_sum > 0.0)) fail(line_no, "weight_sum <= 0");
    a.weighted_enu = {get_num(j, "acc_e", line_no), get_num(j, "acc_n", line_no)};
    if (!j.contains("signature")) fail(line_no, "missing field 'signature'");
    a.signature = signature_from_json(j["signature"], line_no);
    anchors.push_back(std::move(a));
  }
  if (!have_header) throw ParseError("missing anchor db header (empty stream)");
  return anchors;
}

void save_estimates(const std::vector<EstimateRecord>& estimates, std::ostream& out) {
  for (const auto& e : estimates) {
    json j{{"t", e.t}, {"lat", e.position.lat}, {"lon", e.position.lon}, {"resets", e.resets}};
    out << j.dump() << '\n';
  }
}

std::vector<EstimateRecord> load_estimates(std::istream& in) {
  std::vector<EstimateRecord> out;
  std::string line;
  size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    const json j = parse_line(line, line_no);
    EstimateRecord e;
    e.t = get_num(j, "t", line_no);
    try {
      e.position = GeoPoint(get_num(j, "lat", line_no), get_num(j, "lon", line_no));
    } catch (const std::invalid_argument& ex) {
      fail(line_no, ex.what());
    }
    e.resets = static_cast<int>(get_num(j, "resets", line_no));
    out.push_back(e);
  }
  return out;
}

void save_labels(const std::vector<LabeledEvent>& labels, std::ostream& out) {
  for (const auto& l : labels) {
    json j{{"class", std::string(to_string(l.cls.kind))},
           {"t", l.t},
           {"lat", l.position.lat},
           {"lon", l.position.lon}};
    if (l.cls.kind == AnchorClassKind::VirtualScalar) {
      j["channel"] = to_string(l.cls.channel);
      j["feature"] = to_string(l.cls.feature);
    }
    out << j.dump() << '\n';
  }
}

std::vector<LabeledEvent> load_labels(std::istream& in) {
  std::vector<LabeledEvent> out;
  std::string line;
  size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    const json j = parse_line(line, line_no);
    LabeledEvent l;
    try {
      l.cls.kind = anchor_class_kind_from_string(get_str(j, "class", line_no));
      if (l.cls.kind == AnchorClassKind::VirtualScalar) {
        l.cls.channel = channel_from_string(get_str(j, "channel", line_no));
        l.cls.feature = feature_kind_from_string(get_str(j, "feature", line_no));
      }
      l.position = GeoPoint(get_num(j, "lat", line_no), get_num(j, "lon", line_no));
    } catch (const std::invalid_argument& e) {
      fail(line_no, e.what());
    }
    l.t = get_num(j, "t", line_no);
    out.push_back(l);
  }
  return out;
}

namespace {

template <typename T, typename SaveFn>
void save_to_file(const T& value, const std::string& path, SaveFn fn) {
  std::ostringstream ss;
  fn(value, ss);
  atomic_write_file(path, ss.str());
}

template <typename LoadFn>
auto load_from_file(const std::string& path, LoadFn fn, const char* what) {
  std::ifstream in(path);
  if (!in) throw ParseError(std::string("cannot open ") + what + " file: " + path);
  return fn(in);
}

}  // namespace

Trace load_trace_file(const std::string& path) {
  return load_from_file(path, [](std::istream& in) { return parse_trace(in); }, "trace");
}

void save_trace_file(const Trace& trace, const std::string& path) {
  save_to_file(trace, path, [](const Trace& t, std::ostream& out) { save_trace(t, out); });
}

std::vector<Anchor> load_anchors_file(const std::string& path) {
  return load_from_file(path, [](std::istream& in) { return load_anchors(in); }, "anchor db");
}

void save_anchors_file(const std::vector<Anchor>& anchors, const std::string& path) {
  save_to_file(anchors, path,
               [](const std::vector<Anchor>& a, std::ostream& out) { save_anchors(a, out); });
}

void save_estimates_file(const std::vector<EstimateRecord>& estimates, const std::string& path) {
  save_to_file(estimates, path, [](const std::vector<EstimateRecord>& e, std::ostream& out) {
    save_estimates(e, out);
  });
}

std::vector<EstimateRecord> load_estimates_file(const std::string& path) {
  return load_from_file(path, [](std::istream& in) { return load_estimates(in); }, "estimates");
}

void save_labels_file(const std::vector<LabeledEvent>& labels, const std::string& path) {
  save_to_file(labels, path,
               [](const std::vector<LabeledEvent>& l, std::ostream& out) { save_labels(l, out); });
}

std::vector<LabeledEvent> load_labels_file(const std::string& path) {
  return load_from_file(path, [](std::istream& in) { return load_labels(in); }, "labels");
}

void atomic_write_file(const std::string& path, const std::string& content) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write file: " + tmp);
    out << content;
    out.flush();
    if (!out) throw std::runtime_error("write failed: " + tmp);
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace roadloc
