#include "spinekit/ograph.hpp"

#include <algorithm>
#include <charconv>
#include <random>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "spinekit/errors.hpp"

namespace spinekit {

namespace {

std::vector<std::string> tokenize(const std::string& line) {
  std::vector<std::string> tokens;
  std::istringstream in(line);
  std::string tok;
  while (in >> tok) {
    tokens.push_back(tok);
  }
  return tokens;
}

int parse_int(const std::string& tok, int line_no, const char* what) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
    throw ParseError(line_no, std::string("expected ") + what + ", got '" + tok + "'");
  }
  return value;
}

// "<vertex>.<slot>"
EndRef parse_end(const std::string& tok, int line_no, int n_vertices) {
  auto dot = tok.find('.');
  if (dot == std::string::npos) {
    throw ParseError(line_no, "expected end '<vertex>.<slot>', got '" + tok + "'");
  }
  EndRef end;
  end.vertex = parse_int(tok.substr(0, dot), line_no, "vertex index");
  end.slot = parse_int(tok.substr(dot + 1), line_no, "slot index");
  if (end.vertex < 0 || end.vertex >= n_vertices) {
    throw ParseError(line_no, "dangling end: vertex " + std::to_string(end.vertex) +
                                  " does not exist (have " + std::to_string(n_vertices) + ")");
  }
  if (end.slot < 0 || end.slot > 3) {
    throw ParseError(line_no, "dangling end: slot " + std::to_string(end.slot) + " out of range 0..3");
  }
  return end;
}

OEdge canonical_edge(const OEdge& e) {
  OEdge out = e;
  if (out.b < out.a) {
    std::swap(out.a, out.b);
  }
  return out;
}

bool canonical_edge_less(const OEdge& x, const OEdge& y) {
  if (x.a != y.a) return x.a < y.a;
  if (x.b != y.b) return x.b < y.b;
  return x.color < y.color;
}

}  // namespace

void validate(const OGraph& g) {
  if (g.vertices.empty()) {
    throw ValidationError("no vertices");
  }
  const int n = static_cast<int>(g.vertices.size());
  std::vector<int> uses(static_cast<size_t>(n) * 4, 0);
  for (const OEdge& e : g.edges) {
    for (const EndRef& end : {e.a, e.b}) {
      if (end.vertex < 0 || end.vertex >= n) {
        throw ValidationError("dangling end: vertex " + std::to_string(end.vertex) + " does not exist");
      }
      if (end.slot < 0 || end.slot > 3) {
        throw ValidationError("dangling end: slot " + std::to_string(end.slot) + " out of range 0..3");
      }
      int& count = uses[static_cast<size_t>(end.vertex) * 4 + end.slot];
      if (++count > 1) {
        throw ValidationError("end " + std::to_string(end.vertex) + "." + std::to_string(end.slot) +
                              " is used by more than one edge");
      }
    }
    if (e.color < 0 || e.color > 2) {
      throw ValidationError("color " + std::to_string(e.color) + " out of range 0..2");
    }
  }
  for (int v = 0; v < n; ++v) {
    int ends = 0;
    for (int s = 0; s < 4; ++s) {
      ends += uses[static_cast<size_t>(v) * 4 + s];
    }
    if (ends != 4) {
      throw ValidationError("regularity violation: vertex " + std::to_string(v) + " has " +
                            std::to_string(ends) + " ends (expected 4)");
    }
  }
}

OGraph parse_ograph(const std::string& text) {
  OGraph g;
  std::istringstream in(text);
  std::string raw;
  int line_no = 0;
  bool saw_header = false;
  bool saw_vertices = false;
  std::vector<bool> vertex_declared;

  while (std::getline(in, raw)) {
    ++line_no;
    if (!raw.empty() && raw.back() == '\r') {
      raw.pop_back();
    }
    if (auto hash = raw.find('#'); hash != std::string::npos) {
      raw.erase(hash);
    }
    auto tokens = tokenize(raw);
    if (tokens.empty()) {
      continue;
    }

    if (!saw_header) {
      if (tokens.size() != 2 || tokens[0] != "ograph" || tokens[1] != "v1") {
        throw ParseError(line_no, "expected header 'ograph v1'");
      }
      saw_header = true;
      continue;
    }

    if (tokens[0] == "vertices") {
      if (saw_vertices) {
        throw ParseError(line_no, "duplicate 'vertices' line");
      }
      if (tokens.size() != 2) {
        throw ParseError(line_no, "expected 'vertices <n>'");
      }
      const int n = parse_int(tokens[1], line_no, "vertex count");
      if (n <= 0) {
        throw ValidationError("no vertices");
      }
      g.vertices.assign(static_cast<size_t>(n), Crossing{});
      vertex_declared.assign(static_cast<size_t>(n), false);
      saw_vertices = true;
      continue;
    }

    if (!saw_vertices) {
      throw ParseError(line_no, "expected 'vertices <n>' before '" + tokens[0] + "'");
    }

    if (tokens[0] == "vertex") {
      if (tokens.size() != 4 || tokens[2] != "over") {
        throw ParseError(line_no, "expected 'vertex <i> over <02|13>'");
      }
      const int v = parse_int(tokens[1], line_no, "vertex index");
      if (v < 0 || v >= static_cast<int>(g.vertices.size())) {
        throw ParseError(line_no, "vertex " + std::to_string(v) + " out of range");
      }
      if (vertex_declared[static_cast<size_t>(v)]) {
        throw ParseError(line_no, "vertex " + std::to_string(v) + " declared twice");
      }
      vertex_declared[static_cast<size_t>(v)] = true;
      if (tokens[3] == "02") {
        g.vertices[static_cast<size_t>(v)].over = OverStrand::kDiag02;
      } else if (tokens[3] == "13") {
        g.vertices[static_cast<size_t>(v)].over = OverStrand::kDiag13;
      } else {
        throw ParseError(line_no, "over-strand must be 02 or 13, got '" + tokens[3] + "'");
      }
      continue;
    }

    if (tokens[0] == "edge") {
      if (tokens.size() != 5 || tokens[3] != "color") {
        throw ParseError(line_no, "expected 'edge <i>.<slot> <j>.<slot> color <c>'");
      }
      OEdge e;
      e.a = parse_end(tokens[1], line_no, static_cast<int>(g.vertices.size()));
      e.b = parse_end(tokens[2], line_no, static_cast<int>(g.vertices.size()));
      e.color = parse_int(tokens[4], line_no, "color");
      if (e.color < 0 || e.color > 2) {
        throw ParseError(line_no, "color " + std::to_string(e.color) + " out of range 0..2");
      }
      g.edges.push_back(e);
      continue;
    }

    throw ParseError(line_no, "unknown directive '" + tokens[0] + "'");
  }

  if (!saw_header) {
    throw ParseError(0, "empty input, expected header 'ograph v1'");
  }
  if (!saw_vertices) {
    throw ValidationError("no vertices");
  }
  validate(g);
  return g;
}

std::string serialize(const OGraph& g) {
  std::vector<OEdge> edges;
  edges.reserve(g.edges.size());
  for (const OEdge& e : g.edges) {
    edges.push_back(canonical_edge(e));
  }
  std::sort(edges.begin(), edges.end(), canonical_edge_less);

  std::ostringstream out;
  out << "ograph v1\n";
  out << "vertices " << g.vertices.size() << "\n";
  for (size_t v = 0; v < g.vertices.size(); ++v) {
    out << "vertex " << v << " over " << (g.vertices[v].over == OverStrand::kDiag02 ? "02" : "13")
        << "\n";
  }
  for (const OEdge& e : edges) {
    out << "edge " << e.a.vertex << "." << e.a.slot << " " << e.b.vertex << "." << e.b.slot
        << " color " << e.color << "\n";
  }
  return out.str();
}

bool structurally_equal(const OGraph& x, const OGraph& y) {
  if (x.vertices != y.vertices) {
    return false;
  }
  auto canon = [](const OGraph& g) {
    std::vector<OEdge> edges;
    edges.reserve(g.edges.size());
    for (const OEdge& e : g.edges) {
      edges.push_back(canonical_edge(e));
    }
    std::sort(edges.begin(), edges.end(), canonical_edge_less);
    return edges;
  };
  const auto ex = canon(x);
  const auto ey = canon(y);
  if (ex.size() != ey.size()) {
    return false;
  }
  for (size_t i = 0; i < ex.size(); ++i) {
    if (ex[i].a != ey[i].a || ex[i].b != ey[i].b || ex[i].color != ey[i].color) {
      return false;
    }
  }
  return true;
}

OGraph generate_gn(int s) {
  if (s < 0) {
    throw std::invalid_argument("generate_gn: s must be nonnegative");
  }
  const int n = 5 + 4 * s;
  OGraph g;
  g.vertices.assign(static_cast<size_t>(n), Crossing{OverStrand::kDiag02});

  std::vector<std::pair<int, int>> pairs;  // (top, bottom) colors, left to right
  if (s == 0) {
    pairs = {{0, 1}, {1, 1}, {2, 2}, {0, 1}};
  } else {
    pairs.push_back({0, 1});
    for (int i = 0; i < s; ++i) {
      pairs.push_back({1, 1});
      pairs.push_back({0, 1});
    }
    pairs.push_back({1, 0});
    pairs.push_back({0, 1});
    pairs.push_back({0, 1});
    pairs.push_back({1, 0});
    for (int i = 1; i < s; ++i) {
      pairs.push_back({0, 1});
      pairs.push_back({2, 2});
    }
    pairs.push_back({0, 1});
  }

  g.edges.push_back({{0, 1}, {0, 2}, 1});          // left loop
  g.edges.push_back({{n - 1, 0}, {n - 1, 3}, 1});  // right loop
  for (int i = 0; i + 1 < n; ++i) {
    g.edges.push_back({{i, 0}, {i + 1, 1}, pairs[static_cast<size_t>(i)].first});
    g.edges.push_back({{i, 3}, {i + 1, 2}, pairs[static_cast<size_t>(i)].second});
  }
  validate(g);
  return g;
}

OGraph random_ograph(int n, std::uint64_t seed) {
  if (n < 1) {
    throw std::invalid_argument("random_ograph: n must be positive");
  }
  std::mt19937_64 rng(seed);
  OGraph g;
  g.vertices.resize(static_cast<size_t>(n));
  for (Crossing& c : g.vertices) {
    c.over = (rng() % 2 == 0) ? OverStrand::kDiag02 : OverStrand::kDiag13;
  }

  std::vector<EndRef> ends;
  ends.reserve(static_cast<size_t>(n) * 4);
  for (int v = 0; v < n; ++v) {
    for (int s = 0; s < 4; ++s) {
      ends.push_back({v, s});
    }
  }
  // Fisher-Yates with the raw engine, so results do not depend on the
  // standard library's distribution implementations.
  for (size_t i = ends.size() - 1; i > 0; --i) {
    const size_t j = static_cast<size_t>(rng() % (i + 1));
    std::swap(ends[i], ends[j]);
  }
  for (size_t i = 0; i + 1 < ends.size(); i += 2) {
    g.edges.push_back({ends[i], ends[i + 1], static_cast<int>(rng() % 3)});
  }
  validate(g);
  return g;
}

bool is_connected(const OGraph& g) {
  if (g.vertices.empty()) {
    return false;
  }
  const int n = static_cast<int>(g.vertices.size());
  std::vector<std::vector<int>> adj(static_cast<size_t>(n));
  for (const OEdge& e : g.edges) {
    adj[static_cast<size_t>(e.a.vertex)].push_back(e.b.vertex);
    adj[static_cast<size_t>(e.b.vertex)].push_back(e.a.vertex);
  }
  std::vector<bool> seen(static_cast<size_t>(n), false);
  std::vector<int> stack{0};
  seen[0] = true;
  int reached = 0;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    ++reached;
    for (int w : adj[static_cast<size_t>(v)]) {
      if (!seen[static_cast<size_t>(w)]) {
        seen[static_cast<size_t>(w)] = true;
        stack.push_back(w);
      }
    }
  }
  return reached == n;
}

}  // namespace spinekit
