#pragma once

/**
 * @file chroma.hpp
 * @brief Coloring data model and the proper-coloring checkers.
 *
 * Colors are opaque positive integers. Checkers never assume the palette is
 * contiguous; `colors_used` counts distinct values.
 */

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cayley/graph.hpp"

namespace cayley::chroma {

using Color = int;
using graph::Edge;
using graph::Graph;
using graph::Vertex;

struct VertexColoring {
  std::vector<Color> colors;  ///< one per vertex
};

struct EdgeColoring {
  std::map<Edge, Color> colors;
};

/// Symmetric partial n x n matrix. Diagonal = vertex colors, off-diagonal =
/// edge colors, absent = non-edge. Stored as 0 for absent.
class TotalColorMatrix {
 public:
  TotalColorMatrix() = default;
  explicit TotalColorMatrix(std::size_t n) : n_(n), cells_(n * n, 0) {}

  /// Diagonal from `vertices`, off-diagonal from `edges`.
  static TotalColorMatrix from_parts(std::size_t n, const VertexColoring& vertices,
                                     const EdgeColoring& edges);

  std::size_t n() const noexcept { return n_; }
  std::optional<Color> at(std::size_t i, std::size_t j) const;
  /// Sets (i,j) and (j,i). Color 0 clears the cell.
  void set(std::size_t i, std::size_t j, Color c);

  VertexColoring vertex_part() const;
  /// Every present off-diagonal cell, keyed by its edge.
  EdgeColoring edge_part() const;

  friend bool operator==(const TotalColorMatrix&, const TotalColorMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Color> cells_;
};

enum class BoundClass { type_i, type_ii, beyond_tcc, class_i, class_ii, beyond_vizing, not_applicable };

std::string_view to_string(BoundClass b);

/// A vertex (u == v) or an edge {u, v}.
struct ElementRef {
  enum class Kind { vertex, edge };
  Kind kind = Kind::vertex;
  Vertex u = 0;
  Vertex v = 0;

  static ElementRef vertex(Vertex x) { return {Kind::vertex, x, x}; }
  static ElementRef edge(Vertex a, Vertex b) {
    return {Kind::edge, a < b ? a : b, a < b ? b : a};
  }
  std::string describe() const;
  friend bool operator==(const ElementRef&, const ElementRef&) = default;
};

struct ColoringReport {
  bool proper = true;
  std::size_t colors_used = 0;
  std::size_t max_degree = 0;
  BoundClass bound_class = BoundClass::not_applicable;
  /// Two elements that clash; present iff !proper.
  std::optional<std::pair<ElementRef, ElementRef>> witness;
};

ColoringReport verify_vertex(const Graph& g, const VertexColoring& c);
ColoringReport verify_edge(const Graph& g, const EdgeColoring& e);

/// Throws UsageError if the matrix is not n x n or its off-diagonal cells do
/// not match the edge set of g exactly.
ColoringReport verify_total(const Graph& g, const TotalColorMatrix& t);

struct ConformabilityReport {
  bool conformable = false;
  ColoringReport coloring;
  std::size_t required_classes = 0;   ///< max degree + 1
  std::vector<std::size_t> class_sizes;  ///< nonempty classes, then empties
  std::string reason;                 ///< why it is not conformable, if it is not
};

/// Regular graphs only (UsageError otherwise). Conformable iff proper, at most
/// max_degree + 1 distinct colors (unused colors count as empty classes), and
/// every class size, empties included, is congruent to n mod 2.
ConformabilityReport verify_conformable(const Graph& g, const VertexColoring& c);

/// Total-color matrix CSV: header row ",0,1,...,n-1", then one row per vertex
/// "i,c,c,...", blank cell for a non-edge, '\n' line endings.
TotalColorMatrix parse_matrix(std::istream& in);
void format_matrix(std::ostream& out, const TotalColorMatrix& t);
TotalColorMatrix read_matrix(const std::string& path);
void write_matrix(const std::string& path, const TotalColorMatrix& t);
std::string matrix_to_string(const TotalColorMatrix& t);

}  // namespace cayley::chroma
