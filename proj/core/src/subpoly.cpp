#include "spinekit/subpoly.hpp"

#include <algorithm>
#include <future>
#include <thread>

#include "spinekit/errors.hpp"

namespace spinekit {

namespace {

constexpr std::array<std::array<int, 3>, 4> kFaceAscending = {
    {{1, 2, 3}, {0, 2, 3}, {0, 1, 3}, {0, 1, 2}}};

// Edge indices incident to face f: the three tetrahedron edges not containing
// vertex f.
constexpr std::array<std::array<int, 3>, 4> face_edges() {
  std::array<std::array<int, 3>, 4> table{};
  for (int f = 0; f < 4; ++f) {
    int idx = 0;
    for (int e = 0; e < 6; ++e) {
      if (kTetEdges[static_cast<size_t>(e)][0] != f && kTetEdges[static_cast<size_t>(e)][1] != f) {
        table[static_cast<size_t>(f)][static_cast<size_t>(idx++)] = e;
      }
    }
  }
  return table;
}

constexpr std::array<std::array<int, 3>, 4> kFaceEdges = face_edges();

}  // namespace

bool is_simple(const IdealTriangulation& t, const EdgeClassification& classes,
               const Selection& sel) {
  for (int tet = 0; tet < t.n_tets(); ++tet) {
    for (int f = 0; f < 4; ++f) {
      int degree = 0;
      for (int e : kFaceEdges[static_cast<size_t>(f)]) {
        if (sel.contains(classes.class_of_slot[static_cast<size_t>(tet * 6 + e)])) {
          ++degree;
        }
      }
      if (degree == 1) {
        return false;
      }
    }
  }
  return true;
}

SubpolyFamily enumerate_simple(const IdealTriangulation& t, const EdgeClassification& classes,
                               int threads) {
  const int k = classes.count();
  if (k > 62) {
    throw ValidationError("too many 2-components: " + std::to_string(k) + " (limit 62)");
  }
  const std::uint64_t total = std::uint64_t{1} << k;

  const auto scan = [&](std::uint64_t begin, std::uint64_t end) {
    std::vector<Selection> found;
    for (std::uint64_t mask = begin; mask < end; ++mask) {
      const Selection sel{mask, k};
      if (is_simple(t, classes, sel)) {
        found.push_back(sel);
      }
    }
    return found;
  };

  SubpolyFamily family;
  if (threads <= 1 || total < 1024) {
    family.members = scan(0, total);
    return family;
  }

  const int workers = std::min<std::uint64_t>(static_cast<std::uint64_t>(threads), total);
  std::vector<std::future<std::vector<Selection>>> parts;
  parts.reserve(static_cast<size_t>(workers));
  for (int w = 0; w < workers; ++w) {
    const std::uint64_t begin = total / static_cast<std::uint64_t>(workers) * static_cast<std::uint64_t>(w);
    const std::uint64_t end = w + 1 == workers
                                  ? total
                                  : total / static_cast<std::uint64_t>(workers) *
                                        static_cast<std::uint64_t>(w + 1);
    parts.push_back(std::async(std::launch::async, scan, begin, end));
  }
  for (auto& part : parts) {
    auto found = part.get();
    family.members.insert(family.members.end(), found.begin(), found.end());
  }
  return family;
}

SubpolyFamily enumerate_simple(const IdealTriangulation& t) {
  return enumerate_simple(t, edge_classes(t), 1);
}

bool is_poor(const IdealTriangulation& t) {
  const auto classes = edge_classes(t);
  const auto family = enumerate_simple(t, classes, 1);
  return family.members.size() == 2 && family.members[0].empty() && family.members[1].full();
}

SubInvariants sub_invariants(const IdealTriangulation& t, const EdgeClassification& classes,
                             const Selection& sel) {
  if (!is_simple(t, classes, sel)) {
    throw ValidationError("selection is not a simple subpolyhedron");
  }

  SubInvariants out;
  int closure_vertices = 0;
  for (int tet = 0; tet < t.n_tets(); ++tet) {
    int selected = 0;
    for (int e = 0; e < 6; ++e) {
      if (sel.contains(classes.class_of_slot[static_cast<size_t>(tet * 6 + e)])) {
        ++selected;
      }
    }
    if (selected == 6) {
      ++out.true_vertices;
    }
    if (selected > 0) {
      ++closure_vertices;
    }
  }

  int closure_triple_edges = 0;
  for (int tet = 0; tet < t.n_tets(); ++tet) {
    for (int f = 0; f < 4; ++f) {
      const FaceGluing& g = t.gluing(tet, f);
      if (std::pair{tet, f} > std::pair{g.to.tet, g.to.face}) {
        continue;  // count each face pairing (triple edge) once
      }
      bool touched = false;
      for (int e : kFaceEdges[static_cast<size_t>(f)]) {
        if (sel.contains(classes.class_of_slot[static_cast<size_t>(tet * 6 + e)])) {
          touched = true;
          break;
        }
      }
      if (touched) {
        ++closure_triple_edges;
      }
    }
  }

  int selected_components = 0;
  for (int cls = 0; cls < classes.count(); ++cls) {
    if (sel.contains(cls)) {
      ++selected_components;
    }
  }
  out.chi = closure_vertices - closure_triple_edges + selected_components;
  return out;
}

}  // namespace spinekit
