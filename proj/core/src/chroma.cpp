#include "cayley/chroma.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>

#include "cayley/error.hpp"

namespace cayley::chroma {

TotalColorMatrix TotalColorMatrix::from_parts(std::size_t n, const VertexColoring& vertices,
                                              const EdgeColoring& edges) {
  if (vertices.colors.size() != n) throw UsageError("vertex coloring length does not match n");
  TotalColorMatrix t(n);
  for (std::size_t i = 0; i < n; ++i) t.set(i, i, vertices.colors[i]);
  for (const auto& [e, c] : edges.colors) t.set(e.u, e.v, c);
  return t;
}

std::optional<Color> TotalColorMatrix::at(std::size_t i, std::size_t j) const {
  const auto c = cells_.at(i * n_ + j);
  if (c == 0) return std::nullopt;
  return c;
}

void TotalColorMatrix::set(std::size_t i, std::size_t j, Color c) {
  if (i >= n_ || j >= n_) throw UsageError("matrix cell out of range");
  if (c < 0) throw UsageError("colors must be positive");
  cells_[i * n_ + j] = c;
  cells_[j * n_ + i] = c;
}

VertexColoring TotalColorMatrix::vertex_part() const {
  VertexColoring v;
  v.colors.resize(n_);
  for (std::size_t i = 0; i < n_; ++i) v.colors[i] = cells_[i * n_ + i];
  return v;
}

EdgeColoring TotalColorMatrix::edge_part() const {
  EdgeColoring e;
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = i + 1; j < n_; ++j) {
      if (cells_[i * n_ + j] != 0) {
        e.colors.emplace(Edge(static_cast<Vertex>(i), static_cast<Vertex>(j)), cells_[i * n_ + j]);
      }
    }
  }
  return e;
}

std::string_view to_string(BoundClass b) {
  switch (b) {
    case BoundClass::type_i: return "type I";
    case BoundClass::type_ii: return "type II";
    case BoundClass::beyond_tcc: return "beyond TCC";
    case BoundClass::class_i: return "class I";
    case BoundClass::class_ii: return "class II";
    case BoundClass::beyond_vizing: return "beyond Vizing";
    case BoundClass::not_applicable: return "n/a";
  }
  return "n/a";
}

std::string ElementRef::describe() const {
  if (kind == Kind::vertex) return "vertex " + std::to_string(u);
  return "edge {" + std::to_string(u) + "," + std::to_string(v) + "}";
}

namespace {

template <typename Range>
std::size_t distinct(const Range& colors) {
  std::set<Color> s(colors.begin(), colors.end());
  return s.size();
}

void fail(ColoringReport& r, ElementRef a, ElementRef b) {
  if (!r.proper) return;
  r.proper = false;
  r.witness = std::make_pair(a, b);
}

void check_positive(Color c) {
  if (c <= 0) throw UsageError("colors must be positive integers");
}

BoundClass classify_total(std::size_t used, std::size_t delta) {
  if (used <= delta + 1) return BoundClass::type_i;
  if (used == delta + 2) return BoundClass::type_ii;
  return BoundClass::beyond_tcc;
}

BoundClass classify_edge(std::size_t used, std::size_t delta) {
  if (used <= delta) return BoundClass::class_i;
  if (used == delta + 1) return BoundClass::class_ii;
  return BoundClass::beyond_vizing;
}

}  // namespace

ColoringReport verify_vertex(const Graph& g, const VertexColoring& c) {
  if (c.colors.size() != g.n()) {
    throw UsageError("vertex coloring has " + std::to_string(c.colors.size()) +
                     " entries for a graph on " + std::to_string(g.n()) + " vertices");
  }
  for (auto col : c.colors) check_positive(col);
  ColoringReport r;
  r.max_degree = g.max_degree();
  r.colors_used = distinct(c.colors);
  for (const auto& e : g.edges()) {
    if (c.colors[e.u] == c.colors[e.v]) {
      fail(r, ElementRef::vertex(e.u), ElementRef::vertex(e.v));
      break;
    }
  }
  return r;
}

ColoringReport verify_edge(const Graph& g, const EdgeColoring& e) {
  if (e.colors.size() != g.edge_count()) {
    throw UsageError("edge coloring domain does not match the edge set");
  }
  for (const auto& [edge, col] : e.colors) {
    if (!g.has_edge(edge.u, edge.v)) {
      throw UsageError("edge coloring colors a non-edge {" + std::to_string(edge.u) + "," +
                       std::to_string(edge.v) + "}");
    }
    check_positive(col);
  }
  ColoringReport r;
  r.max_degree = g.max_degree();
  std::set<Color> used;
  std::vector<std::unordered_map<Color, Vertex>> seen(g.n());
  for (const auto& [edge, col] : e.colors) {
    used.insert(col);
    for (auto [x, y] : {std::pair{edge.u, edge.v}, std::pair{edge.v, edge.u}}) {
      auto [it, inserted] = seen[x].emplace(col, y);
      if (!inserted) fail(r, ElementRef::edge(x, it->second), ElementRef::edge(edge.u, edge.v));
    }
  }
  r.colors_used = used.size();
  r.bound_class = r.proper ? classify_edge(r.colors_used, r.max_degree) : BoundClass::not_applicable;
  return r;
}

ColoringReport verify_total(const Graph& g, const TotalColorMatrix& t) {
  if (t.n() != g.n()) {
    throw UsageError("matrix is " + std::to_string(t.n()) + "x" + std::to_string(t.n()) +
                     " but the graph has " + std::to_string(g.n()) + " vertices");
  }
  for (std::size_t i = 0; i < g.n(); ++i) {
    if (!t.at(i, i)) throw UsageError("vertex " + std::to_string(i) + " has no color");
    for (std::size_t j = 0; j < g.n(); ++j) {
      if (i == j) continue;
      const bool present = t.at(i, j).has_value();
      const bool edge = g.has_edge(static_cast<Vertex>(i), static_cast<Vertex>(j));
      if (present != edge) {
        throw UsageError("matrix cell (" + std::to_string(i) + "," + std::to_string(j) + ") " +
                         (present ? "colors a non-edge" : "is blank for an edge"));
      }
      if (present && t.at(i, j) != t.at(j, i)) {
        throw UsageError("matrix is not symmetric at (" + std::to_string(i) + "," +
                         std::to_string(j) + ")");
      }
    }
  }

  ColoringReport r;
  r.max_degree = g.max_degree();
  std::set<Color> used;
  for (std::size_t i = 0; i < g.n() && r.proper; ++i) {
    const auto vi = static_cast<Vertex>(i);
    const Color ci = *t.at(i, i);
    used.insert(ci);
    // Row i: the vertex color and its incident edge colors must all differ.
    std::unordered_map<Color, ElementRef> row;
    row.emplace(ci, ElementRef::vertex(vi));
    for (auto j : g.neighbors(vi)) {
      const Color cj = *t.at(i, j);
      used.insert(cj);
      if (*t.at(j, j) == ci) {
        fail(r, ElementRef::vertex(vi), ElementRef::vertex(j));
        break;
      }
      auto [it, inserted] = row.emplace(cj, ElementRef::edge(vi, j));
      if (!inserted) {
        fail(r, it->second, ElementRef::edge(vi, j));
        break;
      }
    }
  }
  r.colors_used = used.size();
  if (!r.proper) {
    // Report the count over the whole matrix even when stopping early.
    for (std::size_t i = 0; i < g.n(); ++i) {
      for (std::size_t j = 0; j < g.n(); ++j) {
        if (auto c = t.at(i, j)) used.insert(*c);
      }
    }
    r.colors_used = used.size();
  }
  r.bound_class = r.proper ? classify_total(r.colors_used, r.max_degree) : BoundClass::not_applicable;
  return r;
}

ConformabilityReport verify_conformable(const Graph& g, const VertexColoring& c) {
  const auto delta = g.max_degree();
  if (!graph::is_regular(g, delta)) {
    throw UsageError("conformability is only checked for regular graphs");
  }
  ConformabilityReport out;
  out.coloring = verify_vertex(g, c);
  out.required_classes = delta + 1;

  std::map<Color, std::size_t> sizes;
  for (auto col : c.colors) ++sizes[col];
  for (const auto& [col, size] : sizes) out.class_sizes.push_back(size);
  std::sort(out.class_sizes.rbegin(), out.class_sizes.rend());
  if (sizes.size() < out.required_classes) {
    out.class_sizes.resize(out.required_classes, 0);
  }

  const auto parity = g.n() % 2;
  if (!out.coloring.proper) {
    out.reason = "not a proper vertex coloring";
  } else if (sizes.size() > out.required_classes) {
    out.reason = "uses " + std::to_string(sizes.size()) + " classes, more than max degree + 1 = " +
                 std::to_string(out.required_classes);
  } else {
    for (auto s : out.class_sizes) {
      if (s % 2 != parity) {
        out.reason = "a class of size " + std::to_string(s) + " has the wrong parity for n=" +
                     std::to_string(g.n());
        break;
      }
    }
  }
  out.conformable = out.reason.empty();
  return out;
}

}  // namespace cayley::chroma
