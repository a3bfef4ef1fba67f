#pragma once

#include <cstdint>
#include <vector>

#include "spinekit/triangulation.hpp"

namespace spinekit {

/// Subset of the k edge classes (2-components of the dual spine). A selection
/// determines a unique candidate subpolyhedron, the union of closures of the
/// selected 2-components.
struct Selection {
  std::uint64_t mask = 0;
  int k = 0;

  bool contains(int cls) const { return (mask >> cls) & 1; }
  bool empty() const { return mask == 0; }
  bool full() const { return k < 64 ? mask == (std::uint64_t{1} << k) - 1 : ~mask == 0; }

  friend bool operator==(const Selection&, const Selection&) = default;
};

/// True iff the selected union of closed 2-components is a simple polyhedron.
///
/// The link of a true vertex is a K4 whose vertices are the four faces of the
/// dual tetrahedron and whose edges are the six tetrahedron edges; a selection
/// induces the edge-subgraph of the selected classes. The admissible links
/// (circle, circle plus diameter, circle plus three radii) are exactly the
/// K4-subgraphs whose vertex degrees all lie in {0,2,3}, so the test checks,
/// for every tetrahedron and every face, that the number of selected edges
/// incident to the face is 0, 2 or 3. The same count rules out free sheets
/// along every triple edge.
bool is_simple(const IdealTriangulation& t, const EdgeClassification& classes,
               const Selection& sel);

/// All simple selections in ascending bitmask order; always contains the
/// empty selection, and the full one whenever the whole spine is simple.
struct SubpolyFamily {
  std::vector<Selection> members;
};

/// Tests all 2^k selections. Throws ValidationError when k > 62. When
/// `threads` > 1 and the subset space is large the bitmask range is
/// partitioned across workers; the result is identical for any worker count.
SubpolyFamily enumerate_simple(const IdealTriangulation& t, const EdgeClassification& classes,
                               int threads = 1);
SubpolyFamily enumerate_simple(const IdealTriangulation& t);

/// True iff the only simple subpolyhedra are the empty one and the spine
/// itself.
bool is_poor(const IdealTriangulation& t);

/// True-vertex count and Euler characteristic of the closure of a simple
/// selection. V counts tetrahedra whose full K4 link is selected; chi counts
/// the closure's cells: tetrahedra and face pairings touched by at least one
/// selected edge germ, plus the selected 2-components themselves.
struct SubInvariants {
  int true_vertices = 0;
  int chi = 0;
};

/// Throws ValidationError when the selection is not simple.
SubInvariants sub_invariants(const IdealTriangulation& t, const EdgeClassification& classes,
                             const Selection& sel);

}  // namespace spinekit
