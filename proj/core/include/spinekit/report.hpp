#pragma once

#include <optional>
#include <string>
#include <vector>

#include "spinekit/invariant.hpp"
#include "spinekit/triangulation.hpp"
#include "spinekit/volume.hpp"

namespace spinekit {

/// Full analysis of one spine, printed as line-oriented `key: value` text.
/// Every field is reproducible bit-exactly from the same input and version.
struct SpineReport {
  std::string input;  // file path or generator tag
  std::string kind;   // "ograph" or "tri"
  int n_tets = 0;
  std::vector<int> class_sizes;
  int triple_edges = 0;
  int chi = 0;
  int boundary_components = 0;
  std::vector<int> boundary_genus;
  int boundary_euler = 0;
  bool poor = false;
  EpsilonInvariant epsilon;
  std::optional<Angle> angle;
  std::optional<VolumeResult> total_volume;  // n_tets * vol(T*_angle)
};

SpineReport analyze(const IdealTriangulation& t, std::string input_id, std::string kind);

std::string format_report(const SpineReport& report);

/// Parses `path` as an o-graph or triangulation file (dispatching on the
/// header line) and analyzes it.
SpineReport analyze_file(const std::string& path);

/// Reads a whole file; throws spinekit::Error with the path on failure.
std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace spinekit
