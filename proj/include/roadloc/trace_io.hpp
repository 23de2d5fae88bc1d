#pragma once

#include "roadloc/trace.hpp"

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace roadloc {

/// Input rejected; the message names the offending line where applicable.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Trace files are JSON Lines: a header object first, then one record per
/// sample (types "inertial", "cell", "wifi", "truth").
Trace parse_trace(std::istream& in);
void save_trace(const Trace& trace, std::ostream& out);

Trace load_trace_file(const std::string& path);
void save_trace_file(const Trace& trace, const std::string& path);

/// Anchor DB files are JSON Lines with a version header line.
std::vector<Anchor> load_anchors(std::istream& in);
void save_anchors(const std::vector<Anchor>& anchors, std::ostream& out);

std::vector<Anchor> load_anchors_file(const std::string& path);
void save_anchors_file(const std::vector<Anchor>& anchors, const std::string& path);

struct EstimateRecord {
  double t = 0.0;
  GeoPoint position;
  int resets = 0;
};

void save_estimates(const std::vector<EstimateRecord>& estimates, std::ostream& out);
std::vector<EstimateRecord> load_estimates(std::istream& in);
void save_estimates_file(const std::vector<EstimateRecord>& estimates, const std::string& path);
std::vector<EstimateRecord> load_estimates_file(const std::string& path);

/// Simulator ground-truth label / detector event record.
struct LabeledEvent {
  AnchorClass cls;
  double t = 0.0;
  GeoPoint position;
};

void save_labels(const std::vector<LabeledEvent>& labels, std::ostream& out);
std::vector<LabeledEvent> load_labels(std::istream& in);
void save_labels_file(const std::vector<LabeledEvent>& labels, const std::string& path);
std::vector<LabeledEvent> load_labels_file(const std::string& path);

/// Writes `content` to `path` atomically (write to a temp sibling, rename).
void atomic_write_file(const std::string& path, const std::string& content);

}  // namespace roadloc
