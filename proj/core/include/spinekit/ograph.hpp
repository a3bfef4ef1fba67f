#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace spinekit {

/// One of the four edge-end positions around a vertex. Slots 0..3 run
/// counterclockwise in the planar drawing; slots {0,2} and {1,3} are the two
/// strands passing through the vertex.
struct EndRef {
  int vertex = 0;
  int slot = 0;

  friend bool operator==(const EndRef&, const EndRef&) = default;
  friend auto operator<=>(const EndRef&, const EndRef&) = default;
};

/// Which diagonal slot pair carries the over-passing strand at a vertex.
enum class OverStrand { kDiag02, kDiag13 };

struct Crossing {
  OverStrand over = OverStrand::kDiag02;

  friend bool operator==(const Crossing&, const Crossing&) = default;
};

struct OEdge {
  EndRef a;
  EndRef b;
  int color = 0;  // element of Z3
};

/// Decorated 4-regular graph: a knot-diagram style crossing at every vertex
/// and a Z3 color on every edge. Loops are edges whose two ends share a
/// vertex and contribute two ends to it. Immutable by convention once built;
/// all functions below are pure.
struct OGraph {
  std::vector<Crossing> vertices;
  std::vector<OEdge> edges;
};

/// Throws ValidationError unless: at least one vertex, every (vertex, slot)
/// covered by exactly one edge end, all colors in {0,1,2}.
void validate(const OGraph& g);

/// Parses the `ograph v1` text format. Throws ParseError with a 1-based line
/// number for malformed text and ValidationError for structural violations;
/// syntax, regularity, dangling ends, and color range are reported distinctly.
OGraph parse_ograph(const std::string& text);

/// Canonical text: vertices by index, edges ordered lexicographically by
/// (min end, max end) with the smaller end written first.
/// parse_ograph(serialize(g)) is structurally equal to g.
std::string serialize(const OGraph& g);

/// Equality up to edge order and end order within an edge.
bool structurally_equal(const OGraph& x, const OGraph& y);

/// The decorated family graph with n = 5 + 4s vertices in a row: a loop at
/// each end vertex and a double edge between consecutive vertices.
///
/// Slot layout at each vertex (counterclockwise): 0 = upper-right,
/// 1 = upper-left, 2 = lower-left, 3 = lower-right. A double edge runs from
/// slot 0 of the left vertex to slot 1 of the right vertex (top arc) and from
/// slot 3 to slot 2 (bottom arc). The left loop takes slots {1,2} of vertex 0,
/// the right loop slots {0,3} of vertex n-1, both colored 1. The strand on
/// slots {0,2} passes over at every vertex.
///
/// Double-edge colors (top, bottom), left to right: for s = 0 the sequence
/// (0,1),(1,1),(2,2),(0,1); for s >= 1 the block sequence
/// (0,1), s x [(1,1),(0,1)], (1,0),(0,1), (0,1),(1,0), (s-1) x [(0,1),(2,2)],
/// (0,1), which reproduces the s = 1 fixture. See docs/conventions.md for how
/// the colors and the gluing convention were calibrated together.
OGraph generate_gn(int s);

/// Deterministic-for-seed random instance: uniform pairing of the 4n ends,
/// uniform colors, uniform over-strand flags. Always passes validate().
OGraph random_ograph(int n, std::uint64_t seed);

bool is_connected(const OGraph& g);

}  // namespace spinekit
