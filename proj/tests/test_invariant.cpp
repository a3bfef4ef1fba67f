#include <doctest.h>

#include <set>
#include <string>
#include <utility>

#include "spinekit/invariant.hpp"
#include "spinekit/ograph.hpp"

using namespace spinekit;

TEST_CASE("subpolyhedron weights") {
  CHECK(subpoly_weight(0, 0) == GoldenInt::one());
  // -eps^-8 and -eps^-16, frozen from the Fibonacci oracle
  CHECK(subpoly_weight(5, -3) == GoldenInt{-34, 21});
  CHECK(subpoly_weight(9, -7) == GoldenInt{-1597, 987});
  CHECK(subpoly_weight(2, 1) == eps_pow(-1));
}

TEST_CASE("epsilon invariant of the family spines") {
  const auto g5 = epsilon_invariant(from_ograph(generate_gn(0)));
  CHECK(g5.value == GoldenInt{-33, 21});
  REQUIRE(g5.terms.size() == 2);
  CHECK(g5.terms[0].selection.empty());
  CHECK(g5.terms[0].weight == GoldenInt::one());
  CHECK(g5.terms[1].selection.full());
  CHECK(g5.terms[1].invariants.true_vertices == 5);
  CHECK(g5.terms[1].invariants.chi == -3);

  const auto g9 = epsilon_invariant(from_ograph(generate_gn(1)));
  CHECK(g9.value == GoldenInt{-1596, 987});
  CHECK(g9.terms.size() == 2);
}

TEST_CASE("term weights sum to the invariant") {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const auto inv = epsilon_invariant(from_ograph(random_ograph(1 + static_cast<int>(seed % 5), seed)));
    GoldenInt sum = GoldenInt::zero();
    for (const auto& term : inv.terms) {
      sum = sum + term.weight;
    }
    CHECK(sum == inv.value);
  }
}

TEST_CASE("closed form for poor spines") {
  CHECK(poor_closed_form(5, -3) == GoldenInt{-33, 21});
  CHECK(poor_closed_form(9, -7) == GoldenInt{-1596, 987});
  CHECK(poor_closed_form(0, 0) == GoldenInt{2, 0});
}

TEST_CASE("every poor spine matches the closed form") {
  int poor_hits = 0;
  for (std::uint64_t seed = 1; seed <= 80; ++seed) {
    const auto t = from_ograph(random_ograph(1 + static_cast<int>(seed % 6), seed + 300));
    if (!is_poor(t)) continue;
    ++poor_hits;
    const auto strata = strata_summary(t);
    CHECK(epsilon_invariant(t).value == poor_closed_form(strata.true_vertices, strata.euler));
  }
  CHECK(poor_hits > 0);
}

TEST_CASE("one-2-component spines follow the k=1 instance of the closed form") {
  int hits = 0;
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    const auto t = from_ograph(random_ograph(1 + static_cast<int>(seed % 5), seed + 900));
    if (edge_classes(t).count() != 1) continue;
    ++hits;
    const int v = t.n_tets();
    GoldenInt expected = eps_pow(static_cast<long long>(1 - v) - v);
    if (v % 2 == 1) expected = -expected;
    expected = expected + GoldenInt::one();
    CHECK(epsilon_invariant(t).value == expected);
  }
  CHECK(hits > 0);
}

TEST_CASE("for fixed chi the weight determines the vertex count") {
  for (int chi : {-7, -3, 0, 2}) {
    std::set<std::pair<std::string, std::string>> seen;
    for (int v = 0; v <= 64; ++v) {
      const GoldenInt w = subpoly_weight(v, chi);
      CHECK(seen.insert({w.a().str(), w.b().str()}).second);
    }
  }
}

TEST_CASE("poor spines have exactly two simple subpolyhedra") {
  for (int s : {0, 1, 2}) {
    const auto inv = epsilon_invariant(from_ograph(generate_gn(s)));
    CHECK(inv.terms.size() == 2);
  }
}
