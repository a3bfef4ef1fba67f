#include <doctest.h>

#include <string>

#include "spinekit/errors.hpp"
#include "spinekit/ograph.hpp"
#include "spinekit/report.hpp"

using namespace spinekit;

#ifndef SPINEKIT_FIXTURE_DIR
#define SPINEKIT_FIXTURE_DIR "fixtures"
#endif

TEST_CASE("report text for the G5 spine") {
  const auto report = analyze(from_ograph(generate_gn(0)), "g5", "generated");
  const std::string expected =
      "input: g5\n"
      "kind: generated\n"
      "tets: 5\n"
      "edge_classes: 2\n"
      "class_sizes: 15 15\n"
      "triple_edges: 10\n"
      "chi: -3\n"
      "boundary_components: 1\n"
      "boundary_genus: 4\n"
      "boundary_euler: -6\n"
      "poor: true\n"
      "simple_subpolyhedra: 2\n"
      "epsilon_exact: -33 + 21*eps\n"
      "epsilon_float: 0.97871376374779184\n"
      "regular_angle: 0.41887902047863906\n"
      "volume_integral: 16.951382465449548\n"
      "volume_lobachevsky: 16.951382465450344\n";
  CHECK(format_report(report) == expected);
}

TEST_CASE("reports are deterministic across runs") {
  const auto a = format_report(analyze(from_ograph(generate_gn(1)), "g9", "generated"));
  const auto b = format_report(analyze(from_ograph(generate_gn(1)), "g9", "generated"));
  CHECK(a == b);
}

TEST_CASE("spines without a regular angle omit the volume block") {
  // two single-vertex graphs produce unequal or small classes
  OGraph g;
  g.vertices.assign(1, Crossing{});
  g.edges.push_back({{0, 0}, {0, 1}, 0});
  g.edges.push_back({{0, 2}, {0, 3}, 1});
  const auto report = analyze(from_ograph(g), "tiny", "generated");
  const std::string text = format_report(report);
  CHECK(text.find("regular_angle: none") != std::string::npos);
  CHECK(text.find("volume_integral") == std::string::npos);
}

TEST_CASE("analyze_file dispatches on the header") {
  const std::string dir = SPINEKIT_FIXTURE_DIR;
  const auto from_file = analyze_file(dir + "/g5.ograph");
  CHECK(from_file.n_tets == 5);
  CHECK(from_file.kind == "ograph");
  CHECK(from_file.poor);

  write_file("/tmp/spinekit_test_g5.tri", serialize(from_ograph(generate_gn(0))));
  const auto tri_report = analyze_file("/tmp/spinekit_test_g5.tri");
  CHECK(tri_report.kind == "tri");
  CHECK(tri_report.class_sizes == std::vector<int>{15, 15});

  write_file("/tmp/spinekit_test_bad.txt", "neither header\n");
  CHECK_THROWS_AS(analyze_file("/tmp/spinekit_test_bad.txt"), ParseError);
  CHECK_THROWS_AS(analyze_file("/tmp/spinekit_no_such_file_xyz"), Error);
}

TEST_CASE("committed fixtures equal the generator output") {
  const std::string dir = SPINEKIT_FIXTURE_DIR;
  CHECK(read_file(dir + "/g5.ograph") == serialize(generate_gn(0)));
  CHECK(read_file(dir + "/g9.ograph") == serialize(generate_gn(1)));
}
