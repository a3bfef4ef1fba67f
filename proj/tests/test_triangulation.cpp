#include <doctest.h>

#include <numbers>
#include <numeric>
#include <string>

#include "spinekit/errors.hpp"
#include "spinekit/ograph.hpp"
#include "spinekit/triangulation.hpp"

using namespace spinekit;

namespace {

int pairing_count(const IdealTriangulation& t) {
  int count = 0;
  for (int tet = 0; tet < t.n_tets(); ++tet) {
    for (int f = 0; f < 4; ++f) {
      const FaceGluing& g = t.gluing(tet, f);
      if (std::pair{tet, f} <= std::pair{g.to.tet, g.to.face}) ++count;
    }
  }
  return count;
}

}  // namespace

TEST_CASE("one tetrahedron per o-graph vertex, one pairing per edge") {
  const auto g5 = from_ograph(generate_gn(0));
  CHECK(g5.n_tets() == 5);
  CHECK(pairing_count(g5) == 10);

  const auto g9 = from_ograph(generate_gn(1));
  CHECK(g9.n_tets() == 9);
  CHECK(pairing_count(g9) == 18);

  const auto single = from_ograph(random_ograph(1, 3));
  CHECK(single.n_tets() == 1);
  CHECK(pairing_count(single) == 2);
}

TEST_CASE("face pairings are involutive on random inputs") {
  for (std::uint64_t seed = 1; seed <= 25; ++seed) {
    const auto t = from_ograph(random_ograph(1 + static_cast<int>(seed % 6), seed));
    for (int tet = 0; tet < t.n_tets(); ++tet) {
      for (int f = 0; f < 4; ++f) {
        const FaceGluing& g = t.gluing(tet, f);
        const FaceGluing& back = t.gluing(g.to.tet, g.to.face);
        CHECK(back.to.tet == tet);
        CHECK(back.to.face == f);
        for (int v = 0; v < 4; ++v) {
          CHECK(back.vertex_map[static_cast<size_t>(g.vertex_map[static_cast<size_t>(v)])] == v);
        }
      }
    }
  }
}

TEST_CASE("edge classes of the family spines") {
  const auto c5 = edge_classes(from_ograph(generate_gn(0)));
  CHECK(c5.count() == 2);
  CHECK(c5.class_sizes == std::vector<int>{15, 15});

  const auto c9 = edge_classes(from_ograph(generate_gn(1)));
  CHECK(c9.count() == 2);
  CHECK(c9.class_sizes == std::vector<int>{27, 27});
}

TEST_CASE("edge classes partition all 6n slots") {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    const auto t = from_ograph(random_ograph(1 + static_cast<int>(seed % 6), seed + 100));
    const auto classes = edge_classes(t);
    CHECK(std::accumulate(classes.class_sizes.begin(), classes.class_sizes.end(), 0) ==
          6 * t.n_tets());
    for (int cls : classes.class_of_slot) {
      CHECK(cls >= 0);
      CHECK(cls < classes.count());
    }
    // class ids ordered by smallest contained slot
    int seen_max = -1;
    for (int slot = 0; slot < 6 * t.n_tets(); ++slot) {
      const int cls = classes.class_of_slot[static_cast<size_t>(slot)];
      if (cls > seen_max) {
        CHECK(cls == seen_max + 1);
        seen_max = cls;
      }
    }
  }
}

TEST_CASE("strata counts and Euler characteristic") {
  const auto s5 = strata_summary(from_ograph(generate_gn(0)));
  CHECK(s5.true_vertices == 5);
  CHECK(s5.triple_edges == 10);
  CHECK(s5.components2 == 2);
  CHECK(s5.euler == -3);

  const auto s9 = strata_summary(from_ograph(generate_gn(1)));
  CHECK(s9.true_vertices == 9);
  CHECK(s9.triple_edges == 18);
  CHECK(s9.components2 == 2);
  CHECK(s9.euler == -7);

  const auto t1 = from_ograph(random_ograph(1, 11));
  const auto s1 = strata_summary(t1);
  CHECK(s1.euler == edge_classes(t1).count() - 1);
}

TEST_CASE("boundary surfaces of the family spines") {
  const auto b5 = boundary_surface(from_ograph(generate_gn(0)));
  CHECK(b5.component_count == 1);
  CHECK(b5.genus_per_component == std::vector<int>{4});
  CHECK(b5.euler_boundary == -6);

  const auto b9 = boundary_surface(from_ograph(generate_gn(1)));
  CHECK(b9.component_count == 1);
  CHECK(b9.genus_per_component == std::vector<int>{8});
  CHECK(b9.euler_boundary == -14);
}

TEST_CASE("boundary Euler characteristic doubles the spine's") {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    const auto t = from_ograph(random_ograph(1 + static_cast<int>(seed % 6), seed + 500));
    const auto strata = strata_summary(t);
    const auto boundary = boundary_surface(t);
    CHECK(boundary.euler_boundary == 2 * strata.euler);
    CHECK(boundary.component_count >= 1);
    for (int genus : boundary.genus_per_component) {
      CHECK(genus >= 0);
    }
  }
}

TEST_CASE("uniform dihedral angles close up around family edge classes") {
  for (int s = 0; s <= 2; ++s) {
    const int n = 5 + 4 * s;
    const auto classes = edge_classes(from_ograph(generate_gn(s)));
    for (int size : classes.class_sizes) {
      CHECK(size == 3 * n);
      CHECK(size * (2.0 * std::numbers::pi / (3.0 * n)) ==
            doctest::Approx(2.0 * std::numbers::pi));
    }
  }
}

TEST_CASE("triangulation text format round trip") {
  const auto t = from_ograph(generate_gn(0));
  const std::string text = serialize(t);
  const auto back = parse_triangulation(text);
  CHECK(back.n_tets() == 5);
  CHECK(serialize(back) == text);
  CHECK(edge_classes(back).class_sizes == std::vector<int>{15, 15});
  CHECK(boundary_surface(back).genus_per_component == std::vector<int>{4});
}

TEST_CASE("manual triangulation entry") {
  // two tetrahedra glued along all four faces
  const char* text =
      "tri v1\n"
      "tets 2\n"
      "glue 0.0 1.0 perm 123   # comment\n"
      "glue 0.1 1.1 perm 023\n"
      "glue 0.2 1.2 perm 013\n"
      "glue 0.3 1.3 perm 012\n";
  const auto t = parse_triangulation(text);
  CHECK(t.n_tets() == 2);
  CHECK(pairing_count(t) == 4);
  const auto classes = edge_classes(t);
  CHECK(std::accumulate(classes.class_sizes.begin(), classes.class_sizes.end(), 0) == 12);
}

TEST_CASE("triangulation parse errors") {
  CHECK_THROWS_WITH_AS(parse_triangulation("tri v2\n"), doctest::Contains("tri v1"), ParseError);
  CHECK_THROWS_WITH_AS(parse_triangulation("tri v1\ntets 0\n"), doctest::Contains("no tetrahedra"),
                       ValidationError);
  CHECK_THROWS_WITH_AS(parse_triangulation("tri v1\ntets 1\nglue 0.0 0.0 perm 321\n"),
                       doctest::Contains("itself"), ParseError);
  CHECK_THROWS_WITH_AS(parse_triangulation("tri v1\ntets 2\nglue 0.0 1.0 perm 113\n"),
                       doctest::Contains("perm"), ParseError);
  CHECK_THROWS_WITH_AS(parse_triangulation("tri v1\ntets 2\nglue 0.0 1.0 perm 120\n"),
                       doctest::Contains("does not map onto"), ParseError);
  // face 0.1 never glued
  const char* incomplete =
      "tri v1\n"
      "tets 2\n"
      "glue 0.0 1.0 perm 123\n"
      "glue 0.2 1.2 perm 013\n"
      "glue 0.3 1.3 perm 012\n";
  CHECK_THROWS_WITH_AS(parse_triangulation(incomplete), doctest::Contains("not glued"),
                       ValidationError);
  // stating both directions inconsistently
  const char* inconsistent =
      "tri v1\n"
      "tets 2\n"
      "glue 0.0 1.0 perm 123\n"
      "glue 1.0 0.0 perm 231\n";
  CHECK_THROWS_WITH_AS(parse_triangulation(inconsistent), doctest::Contains("inconsistently"),
                       ParseError);
}

TEST_CASE("constructor rejects broken pairings") {
  using Table = std::vector<std::array<FaceGluing, 4>>;
  // self-gluing of a face
  Table self(1);
  for (int f = 0; f < 4; ++f) {
    self[0][static_cast<size_t>(f)] = FaceGluing{{0, f}, {0, 1, 2, 3}};
  }
  CHECK_THROWS_AS(IdealTriangulation(1, self), ValidationError);

  // non-involutive vertex maps
  Table broken(2);
  for (int f = 0; f < 4; ++f) {
    std::array<int, 4> id{0, 1, 2, 3};
    broken[0][static_cast<size_t>(f)] = FaceGluing{{1, f}, id};
    broken[1][static_cast<size_t>(f)] = FaceGluing{{0, f}, id};
  }
  broken[0][0].vertex_map = {0, 2, 3, 1};  // image of face 0 must stay face 0
  CHECK_THROWS_AS(IdealTriangulation(2, broken), ValidationError);
}
