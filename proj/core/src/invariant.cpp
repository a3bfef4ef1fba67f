#include "spinekit/invariant.hpp"

namespace spinekit {

GoldenInt subpoly_weight(int true_vertices, int chi) {
  GoldenInt w = eps_pow(static_cast<long long>(chi) - true_vertices);
  return true_vertices % 2 == 0 ? w : -w;
}

EpsilonInvariant epsilon_invariant(const IdealTriangulation& t) {
  const auto classes = edge_classes(t);
  const auto family = enumerate_simple(t, classes, 1);

  EpsilonInvariant result;
  result.value = GoldenInt::zero();
  result.terms.reserve(family.members.size());
  for (const Selection& sel : family.members) {
    const SubInvariants inv = sub_invariants(t, classes, sel);
    GoldenInt w = subpoly_weight(inv.true_vertices, inv.chi);
    result.value = result.value + w;
    result.terms.push_back({sel, inv, std::move(w)});
  }
  return result;
}

GoldenInt poor_closed_form(int true_vertices, int chi) {
  return subpoly_weight(true_vertices, chi) + GoldenInt::one();
}

}  // namespace spinekit
