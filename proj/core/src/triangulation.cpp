#include "spinekit/triangulation.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>

#include "spinekit/errors.hpp"

namespace spinekit {

namespace {

// Vertices of face f (the face opposite vertex f) in ascending order.
constexpr std::array<std::array<int, 3>, 4> kFaceAscending = {
    {{1, 2, 3}, {0, 2, 3}, {0, 1, 3}, {0, 1, 2}}};

// Vertices of face f ordered so that (f, ord[0], ord[1], ord[2]) is an even
// permutation of (0,1,2,3). Matching these orderings reversed produces a
// face pairing whose extension by f -> f' is an odd permutation for every
// face pair, so all tetrahedra can keep one fixed orientation and every
// o-graph yields an orientable manifold.
constexpr std::array<std::array<int, 3>, 4> kFaceOriented = {
    {{1, 2, 3}, {0, 3, 2}, {0, 1, 3}, {0, 2, 1}}};

struct UnionFind {
  std::vector<int> parent;
  std::vector<int> size;

  explicit UnionFind(int n) : parent(static_cast<size_t>(n)), size(static_cast<size_t>(n), 1) {
    std::iota(parent.begin(), parent.end(), 0);
  }

  int find(int x) {
    while (parent[static_cast<size_t>(x)] != x) {
      parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
      x = parent[static_cast<size_t>(x)];
    }
    return x;
  }

  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (size[static_cast<size_t>(a)] < size[static_cast<size_t>(b)]) std::swap(a, b);
    parent[static_cast<size_t>(b)] = a;
    size[static_cast<size_t>(a)] += size[static_cast<size_t>(b)];
  }
};

bool is_permutation_0123(const std::array<int, 4>& m) {
  std::array<bool, 4> seen{};
  for (int v : m) {
    if (v < 0 || v > 3 || seen[static_cast<size_t>(v)]) return false;
    seen[static_cast<size_t>(v)] = true;
  }
  return true;
}

std::array<int, 4> inverse_map(const std::array<int, 4>& m) {
  std::array<int, 4> inv{};
  for (int i = 0; i < 4; ++i) inv[static_cast<size_t>(m[static_cast<size_t>(i)])] = i;
  return inv;
}

}  // namespace

int tet_edge_index(int a, int b) {
  if (a > b) std::swap(a, b);
  for (int i = 0; i < 6; ++i) {
    if (kTetEdges[static_cast<size_t>(i)][0] == a && kTetEdges[static_cast<size_t>(i)][1] == b) {
      return i;
    }
  }
  throw ValidationError("not a tetrahedron edge: {" + std::to_string(a) + "," + std::to_string(b) + "}");
}

IdealTriangulation::IdealTriangulation(int n_tets, std::vector<std::array<FaceGluing, 4>> gluings)
    : n_tets_(n_tets), gluings_(std::move(gluings)) {
  if (n_tets_ < 1) {
    throw ValidationError("no tetrahedra");
  }
  if (gluings_.size() != static_cast<size_t>(n_tets_)) {
    throw ValidationError("gluing table size does not match tetrahedron count");
  }
  for (int t = 0; t < n_tets_; ++t) {
    for (int f = 0; f < 4; ++f) {
      const FaceGluing& g = gluings_[static_cast<size_t>(t)][static_cast<size_t>(f)];
      if (g.to.tet < 0 || g.to.tet >= n_tets_ || g.to.face < 0 || g.to.face > 3) {
        throw ValidationError("gluing of face " + std::to_string(t) + "." + std::to_string(f) +
                              " points outside the triangulation");
      }
      if (g.to.tet == t && g.to.face == f) {
        throw ValidationError("face " + std::to_string(t) + "." + std::to_string(f) +
                              " glued to itself");
      }
      if (!is_permutation_0123(g.vertex_map)) {
        throw ValidationError("gluing of face " + std::to_string(t) + "." + std::to_string(f) +
                              " has a non-bijective vertex map");
      }
      if (g.vertex_map[static_cast<size_t>(f)] != g.to.face) {
        throw ValidationError("gluing of face " + std::to_string(t) + "." + std::to_string(f) +
                              " does not send the face to its partner");
      }
      const FaceGluing& back =
          gluings_[static_cast<size_t>(g.to.tet)][static_cast<size_t>(g.to.face)];
      if (back.to.tet != t || back.to.face != f || back.vertex_map != inverse_map(g.vertex_map)) {
        throw ValidationError("pairing of faces " + std::to_string(t) + "." + std::to_string(f) +
                              " and " + std::to_string(g.to.tet) + "." + std::to_string(g.to.face) +
                              " is not involutive");
      }
    }
  }
}

EdgeClassification edge_classes(const IdealTriangulation& t) {
  const int n = t.n_tets();
  UnionFind uf(6 * n);
  for (int tet = 0; tet < n; ++tet) {
    for (int f = 0; f < 4; ++f) {
      const FaceGluing& g = t.gluing(tet, f);
      const auto& face = kFaceAscending[static_cast<size_t>(f)];
      for (int i = 0; i < 3; ++i) {
        for (int j = i + 1; j < 3; ++j) {
          const int a = face[static_cast<size_t>(i)];
          const int b = face[static_cast<size_t>(j)];
          const int here = tet * 6 + tet_edge_index(a, b);
          const int there = g.to.tet * 6 + tet_edge_index(g.vertex_map[static_cast<size_t>(a)],
                                                          g.vertex_map[static_cast<size_t>(b)]);
          uf.unite(here, there);
        }
      }
    }
  }

  EdgeClassification out;
  out.class_of_slot.assign(static_cast<size_t>(6 * n), -1);
  std::vector<int> root_to_class(static_cast<size_t>(6 * n), -1);
  for (int slot = 0; slot < 6 * n; ++slot) {
    const int root = uf.find(slot);
    if (root_to_class[static_cast<size_t>(root)] < 0) {
      root_to_class[static_cast<size_t>(root)] = static_cast<int>(out.class_sizes.size());
      out.class_sizes.push_back(0);
    }
    const int cls = root_to_class[static_cast<size_t>(root)];
    out.class_of_slot[static_cast<size_t>(slot)] = cls;
    ++out.class_sizes[static_cast<size_t>(cls)];
  }
  return out;
}

SpineStrata strata_summary(const IdealTriangulation& t) {
  SpineStrata s;
  s.true_vertices = t.n_tets();
  s.triple_edges = 2 * t.n_tets();
  s.components2 = edge_classes(t).count();
  s.euler = s.components2 - s.true_vertices;
  return s;
}

BoundaryReport boundary_surface(const IdealTriangulation& t) {
  const int n = t.n_tets();
  // Truncation triangle at vertex v of tet: corners labelled by the other
  // three vertex labels a (corner toward edge {v,a}); side labelled by the
  // face f containing v, joining the two corners different from f.
  const auto corner_id = [](int tet, int v, int a) { return (tet * 4 + v) * 4 + a; };
  const auto tri_id = [](int tet, int v) { return tet * 4 + v; };

  UnionFind corners(16 * n);

  struct SideGluing {
    int tri_a, ca, cb;  // side of tri_a joining local corners ca < cb
    int tri_b, ia, ib;  // image corners in tri_b of ca and cb
  };
  std::vector<SideGluing> sides;

  for (int tet = 0; tet < n; ++tet) {
    for (int f = 0; f < 4; ++f) {
      const FaceGluing& g = t.gluing(tet, f);
      for (int v : kFaceAscending[static_cast<size_t>(f)]) {
        const int mv = g.vertex_map[static_cast<size_t>(v)];
        for (int a : kFaceAscending[static_cast<size_t>(f)]) {
          if (a == v) continue;
          corners.unite(corner_id(tet, v, a),
                        corner_id(g.to.tet, mv, g.vertex_map[static_cast<size_t>(a)]));
        }
        int others[2];
        int idx = 0;
        for (int a : kFaceAscending[static_cast<size_t>(f)]) {
          if (a != v) others[idx++] = a;
        }
        sides.push_back({tri_id(tet, v), others[0], others[1], tri_id(g.to.tet, mv),
                         g.vertex_map[static_cast<size_t>(others[0])],
                         g.vertex_map[static_cast<size_t>(others[1])]});
      }
    }
  }

  // Every side pairing was recorded from both directions; dedupe to one
  // record per unordered side pair.
  std::vector<SideGluing> unique_sides;
  {
    std::vector<bool> used(static_cast<size_t>(16 * n) * 4, false);
    const auto side_key = [](int tri, int ca, int cb) { return (tri * 4 + ca) * 4 + cb; };
    for (const SideGluing& s : sides) {
      const int k = side_key(s.tri_a, std::min(s.ca, s.cb), std::max(s.ca, s.cb));
      if (used[static_cast<size_t>(k)]) continue;
      used[static_cast<size_t>(k)] = true;
      const int k2 = side_key(s.tri_b, std::min(s.ia, s.ib), std::max(s.ia, s.ib));
      used[static_cast<size_t>(k2)] = true;
      unique_sides.push_back(s);
    }
  }

  // Orientability: per-triangle flip bits over the side-adjacency graph. The
  // reference cyclic order of triangle (tet, v) is its corner labels
  // ascending; a compatible gluing must traverse the shared side in opposite
  // directions.
  const auto cyclic_dir = [](int v, int x, int y) {
    int labels[3];
    int idx = 0;
    for (int a = 0; a < 4; ++a) {
      if (a != v) labels[idx++] = a;
    }
    int px = 0;
    int py = 0;
    for (int i = 0; i < 3; ++i) {
      if (labels[i] == x) px = i;
      if (labels[i] == y) py = i;
    }
    return (py - px + 3) % 3 == 1 ? 1 : -1;
  };

  std::vector<int> flip(static_cast<size_t>(4 * n), -1);
  std::vector<std::vector<std::pair<int, int>>> constraint(static_cast<size_t>(4 * n));
  for (const SideGluing& s : unique_sides) {
    const int va = s.tri_a % 4;
    const int vb = s.tri_b % 4;
    const int d1 = cyclic_dir(va, s.ca, s.cb);
    const int d2 = cyclic_dir(vb, s.ia, s.ib);
    // flip_b = flip_a xor (d1*d2 == 1)
    const int parity = d1 * d2 == 1 ? 1 : 0;
    constraint[static_cast<size_t>(s.tri_a)].push_back({s.tri_b, parity});
    constraint[static_cast<size_t>(s.tri_b)].push_back({s.tri_a, parity});
  }

  std::vector<int> component_of(static_cast<size_t>(4 * n), -1);
  int component_count = 0;
  for (int start = 0; start < 4 * n; ++start) {
    if (component_of[static_cast<size_t>(start)] >= 0) continue;
    const int comp = component_count++;
    std::vector<int> stack{start};
    component_of[static_cast<size_t>(start)] = comp;
    flip[static_cast<size_t>(start)] = 0;
    while (!stack.empty()) {
      const int tri = stack.back();
      stack.pop_back();
      for (auto [other, parity] : constraint[static_cast<size_t>(tri)]) {
        const int wanted = flip[static_cast<size_t>(tri)] ^ parity;
        if (component_of[static_cast<size_t>(other)] < 0) {
          component_of[static_cast<size_t>(other)] = comp;
          flip[static_cast<size_t>(other)] = wanted;
          stack.push_back(other);
        } else if (flip[static_cast<size_t>(other)] != wanted) {
          throw ValidationError("non-orientable boundary component detected");
        }
      }
    }
  }

  // Per-component cell counts: triangles, glued sides, corner classes.
  std::vector<int> faces(static_cast<size_t>(component_count), 0);
  std::vector<int> edges(static_cast<size_t>(component_count), 0);
  std::vector<int> verts(static_cast<size_t>(component_count), 0);
  for (int tri = 0; tri < 4 * n; ++tri) {
    ++faces[static_cast<size_t>(component_of[static_cast<size_t>(tri)])];
  }
  for (const SideGluing& s : unique_sides) {
    ++edges[static_cast<size_t>(component_of[static_cast<size_t>(s.tri_a)])];
  }
  std::vector<bool> root_seen(static_cast<size_t>(16 * n), false);
  for (int tet = 0; tet < n; ++tet) {
    for (int v = 0; v < 4; ++v) {
      for (int a = 0; a < 4; ++a) {
        if (a == v) continue;
        const int root = corners.find(corner_id(tet, v, a));
        if (!root_seen[static_cast<size_t>(root)]) {
          root_seen[static_cast<size_t>(root)] = true;
          ++verts[static_cast<size_t>(component_of[static_cast<size_t>(tri_id(tet, v))])];
        }
      }
    }
  }

  BoundaryReport report;
  report.component_count = component_count;
  for (int c = 0; c < component_count; ++c) {
    const int chi = verts[static_cast<size_t>(c)] - edges[static_cast<size_t>(c)] +
                    faces[static_cast<size_t>(c)];
    report.euler_boundary += chi;
    if (chi % 2 != 0 || chi > 2) {
      throw ValidationError("boundary component has invalid Euler characteristic " +
                            std::to_string(chi));
    }
    report.genus_per_component.push_back((2 - chi) / 2);
  }
  return report;
}

GluingConvention frozen_convention() {
  // Selected by the calibration sweep against the family fixtures (see
  // docs/conventions.md): identity slot-to-face map, rotation = color + 1 on
  // the double-edge slot pairs {0,1} and {2,3}, rotation = color + 1 on the
  // right-loop pair {0,3}, rotation = color on everything else.
  GluingConvention conv;
  conv.slot_to_face = {0, 1, 2, 3};
  conv.rotation_sign = 1;
  const auto set = [&conv](int i, int j, int v) {
    conv.pair_offset[static_cast<size_t>(i)][static_cast<size_t>(j)] = v;
    conv.pair_offset[static_cast<size_t>(j)][static_cast<size_t>(i)] = v;
  };
  set(0, 1, 1);
  set(2, 3, 1);
  set(0, 3, 1);
  return conv;
}

IdealTriangulation from_ograph(const OGraph& g) { return from_ograph(g, frozen_convention()); }

IdealTriangulation from_ograph(const OGraph& g, const GluingConvention& convention) {
  validate(g);
  if (convention.rotation_sign != 1 && convention.rotation_sign != -1) {
    throw ValidationError("convention rotation_sign must be +1 or -1");
  }
  if (!is_permutation_0123(convention.slot_to_face)) {
    throw ValidationError("convention slot_to_face is not a permutation");
  }
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      const int off = convention.pair_offset[static_cast<size_t>(i)][static_cast<size_t>(j)];
      if (off < 0 || off > 2 ||
          off != convention.pair_offset[static_cast<size_t>(j)][static_cast<size_t>(i)]) {
        throw ValidationError("convention pair_offset must be symmetric with entries 0..2");
      }
    }
  }

  const int n = static_cast<int>(g.vertices.size());
  // Slot -> face: rotate the slots of an over-13 vertex one step clockwise so
  // the over-strand always sits on {0,2}, then apply the fixed permutation.
  const auto face_of = [&](const EndRef& end) {
    const int normalized = g.vertices[static_cast<size_t>(end.vertex)].over == OverStrand::kDiag02
                               ? end.slot
                               : (end.slot + 3) % 4;
    return convention.slot_to_face[static_cast<size_t>(normalized)];
  };

  std::vector<std::array<FaceGluing, 4>> gluings(static_cast<size_t>(n));
  for (const OEdge& e : g.edges) {
    const int fa = face_of(e.a);
    const int fb = face_of(e.b);
    const int rot = ((convention.rotation_sign * e.color +
                      convention.pair_offset[static_cast<size_t>(fa)][static_cast<size_t>(fb)]) %
                         3 +
                     3) %
                    3;

    // Match the oriented order of face fa against the reversed oriented order
    // of face fb, rotated by the edge color.
    std::array<int, 4> map{};
    map[static_cast<size_t>(fa)] = fb;
    const auto& from = kFaceOriented[static_cast<size_t>(fa)];
    const auto& to = kFaceOriented[static_cast<size_t>(fb)];
    for (int i = 0; i < 3; ++i) {
      map[static_cast<size_t>(from[static_cast<size_t>(i)])] =
          to[static_cast<size_t>(2 - (i + rot) % 3)];
    }

    gluings[static_cast<size_t>(e.a.vertex)][static_cast<size_t>(fa)] =
        FaceGluing{{e.b.vertex, fb}, map};
    gluings[static_cast<size_t>(e.b.vertex)][static_cast<size_t>(fb)] =
        FaceGluing{{e.a.vertex, fa}, inverse_map(map)};
  }

  return IdealTriangulation(n, std::move(gluings));
}

namespace {

std::vector<std::string> split_tokens(const std::string& line) {
  std::vector<std::string> tokens;
  std::istringstream in(line);
  std::string tok;
  while (in >> tok) tokens.push_back(tok);
  return tokens;
}

int parse_int_tok(const std::string& tok, int line_no, const char* what) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
    throw ParseError(line_no, std::string("expected ") + what + ", got '" + tok + "'");
  }
  return value;
}

FaceRef parse_face_ref(const std::string& tok, int line_no, int n_tets) {
  auto dot = tok.find('.');
  if (dot == std::string::npos) {
    throw ParseError(line_no, "expected face '<tet>.<face>', got '" + tok + "'");
  }
  FaceRef ref;
  ref.tet = parse_int_tok(tok.substr(0, dot), line_no, "tetrahedron index");
  ref.face = parse_int_tok(tok.substr(dot + 1), line_no, "face index");
  if (ref.tet < 0 || ref.tet >= n_tets) {
    throw ParseError(line_no, "tetrahedron " + std::to_string(ref.tet) + " does not exist");
  }
  if (ref.face < 0 || ref.face > 3) {
    throw ParseError(line_no, "face " + std::to_string(ref.face) + " out of range 0..3");
  }
  return ref;
}

}  // namespace

IdealTriangulation parse_triangulation(const std::string& text) {
  std::istringstream in(text);
  std::string raw;
  int line_no = 0;
  bool saw_header = false;
  int n_tets = -1;
  std::vector<std::array<FaceGluing, 4>> gluings;
  std::vector<std::array<bool, 4>> have;

  const auto set_gluing = [&](const FaceRef& from, const FaceGluing& g, int line) {
    auto& slot_have = have[static_cast<size_t>(from.tet)][static_cast<size_t>(from.face)];
    auto& slot = gluings[static_cast<size_t>(from.tet)][static_cast<size_t>(from.face)];
    if (slot_have) {
      if (slot.to != g.to || slot.vertex_map != g.vertex_map) {
        throw ParseError(line, "face " + std::to_string(from.tet) + "." +
                                   std::to_string(from.face) + " glued inconsistently twice");
      }
      return;
    }
    slot_have = true;
    slot = g;
  };

  while (std::getline(in, raw)) {
    ++line_no;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    auto tokens = split_tokens(raw);
    if (tokens.empty()) continue;

    if (!saw_header) {
      if (tokens.size() != 2 || tokens[0] != "tri" || tokens[1] != "v1") {
        throw ParseError(line_no, "expected header 'tri v1'");
      }
      saw_header = true;
      continue;
    }
    if (tokens[0] == "tets") {
      if (n_tets >= 0) throw ParseError(line_no, "duplicate 'tets' line");
      if (tokens.size() != 2) throw ParseError(line_no, "expected 'tets <n>'");
      n_tets = parse_int_tok(tokens[1], line_no, "tetrahedron count");
      if (n_tets <= 0) throw ValidationError("no tetrahedra");
      gluings.resize(static_cast<size_t>(n_tets));
      have.assign(static_cast<size_t>(n_tets), {false, false, false, false});
      continue;
    }
    if (n_tets < 0) {
      throw ParseError(line_no, "expected 'tets <n>' before '" + tokens[0] + "'");
    }
    if (tokens[0] == "glue") {
      if (tokens.size() != 5 || tokens[3] != "perm") {
        throw ParseError(line_no, "expected 'glue <i>.<f> <j>.<g> perm <abc>'");
      }
      const FaceRef from = parse_face_ref(tokens[1], line_no, n_tets);
      const FaceRef to = parse_face_ref(tokens[2], line_no, n_tets);
      if (from == to) {
        throw ParseError(line_no, "face glued to itself");
      }
      const std::string& perm = tokens[4];
      if (perm.size() != 3 || perm.find_first_not_of("0123") != std::string::npos) {
        throw ParseError(line_no, "perm must be three digits 0..3, got '" + perm + "'");
      }
      std::array<int, 4> map{};
      map[static_cast<size_t>(from.face)] = to.face;
      const auto& asc = kFaceAscending[static_cast<size_t>(from.face)];
      for (int i = 0; i < 3; ++i) {
        map[static_cast<size_t>(asc[static_cast<size_t>(i)])] =
            perm[static_cast<size_t>(i)] - '0';
      }
      if (!is_permutation_0123(map)) {
        throw ParseError(line_no, "perm '" + perm + "' does not map onto face " +
                                      std::to_string(to.face) + " of tet " + std::to_string(to.tet));
      }
      set_gluing(from, FaceGluing{to, map}, line_no);
      set_gluing(to, FaceGluing{from, inverse_map(map)}, line_no);
      continue;
    }
    throw ParseError(line_no, "unknown directive '" + tokens[0] + "'");
  }

  if (!saw_header) throw ParseError(0, "empty input, expected header 'tri v1'");
  if (n_tets < 0) throw ValidationError("no tetrahedra");
  for (int t = 0; t < n_tets; ++t) {
    for (int f = 0; f < 4; ++f) {
      if (!have[static_cast<size_t>(t)][static_cast<size_t>(f)]) {
        throw ValidationError("face " + std::to_string(t) + "." + std::to_string(f) +
                              " is not glued");
      }
    }
  }
  return IdealTriangulation(n_tets, std::move(gluings));
}

std::string serialize(const IdealTriangulation& t) {
  std::ostringstream out;
  out << "tri v1\n";
  out << "tets " << t.n_tets() << "\n";
  for (int tet = 0; tet < t.n_tets(); ++tet) {
    for (int f = 0; f < 4; ++f) {
      const FaceGluing& g = t.gluing(tet, f);
      if (std::pair{tet, f} > std::pair{g.to.tet, g.to.face}) continue;
      out << "glue " << tet << "." << f << " " << g.to.tet << "." << g.to.face << " perm ";
      for (int v : kFaceAscending[static_cast<size_t>(f)]) {
        out << g.vertex_map[static_cast<size_t>(v)];
      }
      out << "\n";
    }
  }
  return out.str();
}

}  // namespace spinekit
