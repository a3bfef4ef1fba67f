#include "spinekit/report.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "spinekit/errors.hpp"
#include "spinekit/subpoly.hpp"

namespace spinekit {

namespace {

std::string format_double(double value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", value);
  return buf;
}

}  // namespace

SpineReport analyze(const IdealTriangulation& t, std::string input_id, std::string kind) {
  SpineReport report;
  report.input = std::move(input_id);
  report.kind = std::move(kind);
  report.n_tets = t.n_tets();

  const auto classes = edge_classes(t);
  report.class_sizes = classes.class_sizes;
  const auto strata = strata_summary(t);
  report.triple_edges = strata.triple_edges;
  report.chi = strata.euler;

  const auto boundary = boundary_surface(t);
  report.boundary_components = boundary.component_count;
  report.boundary_genus = boundary.genus_per_component;
  report.boundary_euler = boundary.euler_boundary;

  report.poor = is_poor(t);
  report.epsilon = epsilon_invariant(t);

  report.angle = regular_angle(t);
  if (report.angle) {
    VolumeResult v = vol_regular_truncated(*report.angle);
    v.via_integral *= report.n_tets;
    v.via_lobachevsky *= report.n_tets;
    v.agreed = std::abs(v.discrepancy()) <= report.n_tets * kVolumeAgreementTol;
    report.total_volume = v;
  }
  return report;
}

std::string format_report(const SpineReport& report) {
  std::ostringstream out;
  out << "input: " << report.input << "\n";
  out << "kind: " << report.kind << "\n";
  out << "tets: " << report.n_tets << "\n";
  out << "edge_classes: " << report.class_sizes.size() << "\n";
  out << "class_sizes:";
  for (int size : report.class_sizes) {
    out << " " << size;
  }
  out << "\n";
  out << "triple_edges: " << report.triple_edges << "\n";
  out << "chi: " << report.chi << "\n";
  out << "boundary_components: " << report.boundary_components << "\n";
  out << "boundary_genus:";
  for (int g : report.boundary_genus) {
    out << " " << g;
  }
  out << "\n";
  out << "boundary_euler: " << report.boundary_euler << "\n";
  out << "poor: " << (report.poor ? "true" : "false") << "\n";
  out << "simple_subpolyhedra: " << report.epsilon.terms.size() << "\n";
  out << "epsilon_exact: " << to_string(report.epsilon.value) << "\n";
  out << "epsilon_float: " << format_double(to_real(report.epsilon.value)) << "\n";
  if (report.angle) {
    out << "regular_angle: " << format_double(report.angle->radians) << "\n";
    out << "volume_integral: " << format_double(report.total_volume->via_integral) << "\n";
    out << "volume_lobachevsky: " << format_double(report.total_volume->via_lobachevsky) << "\n";
  } else {
    out << "regular_angle: none\n";
  }
  return out.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error("cannot open " + path);
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) {
    throw Error("error reading " + path);
  }
  return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw Error("cannot open " + path + " for writing");
  }
  out << content;
  if (!out) {
    throw Error("error writing " + path);
  }
}

SpineReport analyze_file(const std::string& path) {
  const std::string text = read_file(path);
  std::istringstream in(text);
  std::string first;
  std::getline(in, first);
  if (first.rfind("ograph", 0) == 0) {
    return analyze(from_ograph(parse_ograph(text)), path, "ograph");
  }
  if (first.rfind("tri", 0) == 0) {
    return analyze(parse_triangulation(text), path, "tri");
  }
  throw ParseError(1, "unrecognized header; expected 'ograph v1' or 'tri v1'");
}

}  // namespace spinekit
