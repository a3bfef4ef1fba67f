#pragma once

#include <vector>

#include "spinekit/golden_ring.hpp"
#include "spinekit/subpoly.hpp"

namespace spinekit {

/// Weight (-1)^V * eps^(chi - V) of a simple subpolyhedron with V true
/// vertices and Euler characteristic chi.
GoldenInt subpoly_weight(int true_vertices, int chi);

struct EpsilonTerm {
  Selection selection;
  SubInvariants invariants;
  GoldenInt weight;
};

/// The epsilon-invariant: exact sum of the weights of all simple
/// subpolyhedra of the spine, with the per-subpolyhedron term table.
struct EpsilonInvariant {
  GoldenInt value;
  std::vector<EpsilonTerm> terms;
};

EpsilonInvariant epsilon_invariant(const IdealTriangulation& t);

/// Two-term value 1 + (-1)^V * eps^(chi - V), the invariant of any manifold
/// with a poor special spine of these parameters.
GoldenInt poor_closed_form(int true_vertices, int chi);

}  // namespace spinekit
