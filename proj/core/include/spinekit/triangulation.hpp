#pragma once

#include <array>
#include <string>
#include <vector>

#include "spinekit/ograph.hpp"

namespace spinekit {

struct FaceRef {
  int tet = 0;
  int face = 0;  // 0..3, face f is opposite vertex f

  friend bool operator==(const FaceRef&, const FaceRef&) = default;
  friend auto operator<=>(const FaceRef&, const FaceRef&) = default;
};

/// One side of a face pairing. `vertex_map` is the full vertex-label map of
/// the source tetrahedron: it sends the three vertices of the glued face to
/// the vertices of the partner face and the opposite vertex (the face index)
/// to the partner face index.
struct FaceGluing {
  FaceRef to;
  std::array<int, 4> vertex_map{0, 1, 2, 3};
};

/// n tetrahedra with a complete involutive pairing of their 4n faces; no face
/// is glued to itself. Dual to a special spine with n true vertices.
/// Immutable after construction and safe to share between threads.
class IdealTriangulation {
 public:
  /// `gluings[t][f]` describes the partner of face f of tetrahedron t.
  /// Throws ValidationError unless the pairing is a well-formed involution.
  IdealTriangulation(int n_tets, std::vector<std::array<FaceGluing, 4>> gluings);

  int n_tets() const { return n_tets_; }
  const FaceGluing& gluing(int tet, int face) const {
    return gluings_[static_cast<size_t>(tet)][static_cast<size_t>(face)];
  }

 private:
  int n_tets_;
  std::vector<std::array<FaceGluing, 4>> gluings_;
};

// Tetrahedron edges are vertex pairs {a,b}, a < b, indexed 0..5 in the order
// {0,1},{0,2},{0,3},{1,2},{1,3},{2,3}. Edge slot = tet*6 + edge index.
inline constexpr std::array<std::array<int, 2>, 6> kTetEdges = {
    {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};
int tet_edge_index(int a, int b);

/// Partition of the 6n tetrahedron-edge slots under the face gluings. Class
/// ids are assigned in order of each class's smallest slot, so numbering is
/// reproducible. Classes correspond to the 2-components of the dual spine.
struct EdgeClassification {
  std::vector<int> class_of_slot;  // size 6 * n_tets
  std::vector<int> class_sizes;    // indexed by class id

  int count() const { return static_cast<int>(class_sizes.size()); }
};

EdgeClassification edge_classes(const IdealTriangulation& t);

/// Strata counts of the dual spine: n true vertices, 2n triple edges (face
/// classes), k 2-components, and euler = k - n.
struct SpineStrata {
  int true_vertices = 0;
  int triple_edges = 0;
  int components2 = 0;
  int euler = 0;
};

SpineStrata strata_summary(const IdealTriangulation& t);

/// Boundary surface assembled from the 4n truncation triangles. Throws
/// ValidationError if any component comes out non-orientable, which signals
/// a gluing-convention bug: o-graphs encode orientable manifolds.
struct BoundaryReport {
  int component_count = 0;
  std::vector<int> genus_per_component;
  int euler_boundary = 0;
};

BoundaryReport boundary_surface(const IdealTriangulation& t);

/// Slot-to-face and color-to-rotation convention used to turn an o-graph
/// into tetrahedron face pairings. An edge with color c glues its two faces
/// by matching their oriented vertex orders, one reversed, rotated by
/// rotation_sign * c + pair_offset[f][f']. The shipped constants were
/// selected by calibrating against the documented family fixtures (see
/// docs/conventions.md); from_ograph(g) uses them. The parametrized overload
/// exists so the calibration sweep itself stays testable.
struct GluingConvention {
  std::array<int, 4> slot_to_face{0, 1, 2, 3};
  int rotation_sign = 1;  // +1 or -1, applied to the edge color
  // Base rotation per unordered face pair; must be symmetric.
  std::array<std::array<int, 4>, 4> pair_offset{};
};

GluingConvention frozen_convention();

IdealTriangulation from_ograph(const OGraph& g);
IdealTriangulation from_ograph(const OGraph& g, const GluingConvention& convention);

/// Parses the `tri v1` text format (one `glue` line per face pairing).
IdealTriangulation parse_triangulation(const std::string& text);

/// Canonical text: one line per pairing, keyed by its lexicographically
/// smaller side, ordered by that side.
std::string serialize(const IdealTriangulation& t);

}  // namespace spinekit
