#include <doctest.h>

#include <map>
#include <set>
#include <string>

#include "spinekit/errors.hpp"
#include "spinekit/ograph.hpp"

using namespace spinekit;

namespace {

int loop_count(const OGraph& g) {
  int loops = 0;
  for (const OEdge& e : g.edges) {
    if (e.a.vertex == e.b.vertex) ++loops;
  }
  return loops;
}

// Number of unordered vertex pairs joined by exactly two parallel edges.
int double_edge_count(const OGraph& g) {
  std::map<std::pair<int, int>, int> between;
  for (const OEdge& e : g.edges) {
    if (e.a.vertex == e.b.vertex) continue;
    ++between[{std::min(e.a.vertex, e.b.vertex), std::max(e.a.vertex, e.b.vertex)}];
  }
  int doubles = 0;
  for (const auto& [pair, count] : between) {
    if (count == 2) ++doubles;
  }
  return doubles;
}

}  // namespace

TEST_CASE("canonical G5 file parses to the expected shape") {
  const OGraph g = parse_ograph(serialize(generate_gn(0)));
  CHECK(g.vertices.size() == 5);
  CHECK(g.edges.size() == 10);
  CHECK(loop_count(g) == 2);
  CHECK(double_edge_count(g) == 4);
}

TEST_CASE("parser reports distinct error kinds") {
  SUBCASE("bad header") {
    CHECK_THROWS_WITH_AS(parse_ograph("graph v2\n"), doctest::Contains("ograph v1"), ParseError);
  }
  SUBCASE("no vertices") {
    CHECK_THROWS_WITH_AS(parse_ograph("ograph v1\nvertices 0\n"), doctest::Contains("no vertices"),
                         ValidationError);
    CHECK_THROWS_WITH_AS(parse_ograph("ograph v1\n"), doctest::Contains("no vertices"),
                         ValidationError);
  }
  SUBCASE("vertex with three ends is a regularity violation") {
    // all four ends of vertex 0 used, but vertex 1 covered three times
    const char* text =
        "ograph v1\n"
        "vertices 2\n"
        "edge 0.0 0.1 color 0\n"
        "edge 0.2 0.3 color 0\n"
        "edge 1.0 1.1 color 0\n";
    CHECK_THROWS_WITH_AS(parse_ograph(text), doctest::Contains("regularity"), ValidationError);
  }
  SUBCASE("dangling vertex reference") {
    const char* text =
        "ograph v1\n"
        "vertices 1\n"
        "edge 0.0 3.1 color 0\n";
    CHECK_THROWS_WITH_AS(parse_ograph(text), doctest::Contains("dangling"), ParseError);
  }
  SUBCASE("slot out of range") {
    const char* text =
        "ograph v1\n"
        "vertices 1\n"
        "edge 0.0 0.4 color 0\n";
    CHECK_THROWS_WITH_AS(parse_ograph(text), doctest::Contains("slot"), ParseError);
  }
  SUBCASE("color out of range") {
    const char* text =
        "ograph v1\n"
        "vertices 1\n"
        "edge 0.0 0.1 color 3\n";
    CHECK_THROWS_WITH_AS(parse_ograph(text), doctest::Contains("color"), ParseError);
  }
  SUBCASE("end used twice") {
    const char* text =
        "ograph v1\n"
        "vertices 1\n"
        "edge 0.0 0.1 color 0\n"
        "edge 0.0 0.2 color 0\n";
    CHECK_THROWS_WITH_AS(parse_ograph(text), doctest::Contains("more than one"), ValidationError);
  }
  SUBCASE("errors carry line numbers") {
    try {
      parse_ograph("ograph v1\nvertices 1\nedge 0.0 9.1 color 0\n");
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(e.line() == 3);
    }
  }
  SUBCASE("unknown directive") {
    CHECK_THROWS_AS(parse_ograph("ograph v1\nvertices 1\nfrobnicate\n"), ParseError);
  }
  SUBCASE("duplicate vertex declaration") {
    const char* text =
        "ograph v1\n"
        "vertices 1\n"
        "vertex 0 over 02\n"
        "vertex 0 over 13\n";
    CHECK_THROWS_WITH_AS(parse_ograph(text), doctest::Contains("twice"), ParseError);
  }
}

TEST_CASE("comments and blank lines are tolerated") {
  const char* text =
      "ograph v1\n"
      "# a comment\n"
      "\n"
      "vertices 1\n"
      "vertex 0 over 13  # trailing comment\n"
      "edge 0.0 0.2 color 1\n"
      "edge 0.1 0.3 color 2\n";
  const OGraph g = parse_ograph(text);
  CHECK(g.vertices[0].over == OverStrand::kDiag13);
  CHECK(g.edges.size() == 2);
}

TEST_CASE("generator colors are the calibrated fixture sequences") {
  // Left-to-right (top, bottom) colors of the double edges; both loops are 1.
  const auto colors_of = [](const OGraph& g) {
    std::map<int, std::pair<int, int>> by_left;  // left vertex -> (top, bottom)
    for (const OEdge& e : g.edges) {
      if (e.a.vertex == e.b.vertex) continue;
      const EndRef left = e.a.vertex < e.b.vertex ? e.a : e.b;
      auto& entry = by_left[left.vertex];
      if (left.slot == 0) {
        entry.first = e.color;
      } else {
        entry.second = e.color;
      }
    }
    std::vector<std::pair<int, int>> out;
    for (const auto& [v, pair] : by_left) out.push_back(pair);
    return out;
  };

  const OGraph g5 = generate_gn(0);
  for (const OEdge& e : g5.edges) {
    if (e.a.vertex == e.b.vertex) CHECK(e.color == 1);
  }
  CHECK(colors_of(g5) ==
        std::vector<std::pair<int, int>>{{0, 1}, {1, 1}, {2, 2}, {0, 1}});

  const OGraph g9 = generate_gn(1);
  CHECK(colors_of(g9) == std::vector<std::pair<int, int>>{
                             {0, 1}, {1, 1}, {0, 1}, {1, 0}, {0, 1}, {0, 1}, {1, 0}, {0, 1}});
}

TEST_CASE("family graphs have the advertised shape for s <= 4") {
  for (int s = 0; s <= 4; ++s) {
    const OGraph g = generate_gn(s);
    const int n = 5 + 4 * s;
    CAPTURE(s);
    CHECK(static_cast<int>(g.vertices.size()) == n);
    CHECK(static_cast<int>(g.edges.size()) == 2 * n);
    CHECK(loop_count(g) == 2);
    CHECK(double_edge_count(g) == n - 1);
    CHECK(is_connected(g));
    CHECK_NOTHROW(validate(g));
  }
}

TEST_CASE("round trip preserves structure") {
  CHECK(structurally_equal(generate_gn(1), parse_ograph(serialize(generate_gn(1)))));
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    const OGraph g = random_ograph(1 + static_cast<int>(seed % 7), seed);
    CHECK(structurally_equal(g, parse_ograph(serialize(g))));
  }
}

TEST_CASE("serialization is canonical") {
  OGraph g = generate_gn(0);
  std::swap(g.edges[0], g.edges[5]);
  std::swap(g.edges[2].a, g.edges[2].b);
  CHECK(serialize(g) == serialize(generate_gn(0)));
}

TEST_CASE("random o-graphs") {
  SUBCASE("one vertex forces two loops") {
    const OGraph g = random_ograph(1, 7);
    CHECK(g.vertices.size() == 1);
    CHECK(g.edges.size() == 2);
    CHECK(loop_count(g) == 2);
  }
  SUBCASE("same seed, same graph") {
    CHECK(structurally_equal(random_ograph(4, 1), random_ograph(4, 1)));
  }
  SUBCASE("different seeds give different graphs that still validate") {
    const OGraph a = random_ograph(4, 1);
    const OGraph b = random_ograph(4, 2);
    CHECK_NOTHROW(validate(a));
    CHECK_NOTHROW(validate(b));
    CHECK(!structurally_equal(a, b));
  }
}
