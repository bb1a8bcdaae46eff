#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cayley/gyro.hpp"
#include "cayley/perm.hpp"

namespace cayley::graph {

using Vertex = std::uint32_t;

/// Unordered edge stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;
  Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Undirected simple graph on 0..n-1. Immutable once built.
class Graph {
 public:
  Graph() = default;

  /// Normalizes edge orientation and drops duplicates. Loops and
  /// out-of-range endpoints throw UsageError.
  Graph(std::size_t n, std::vector<Edge> edges, std::vector<std::string> labels = {});

  std::size_t n() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  /// Sorted lexicographically.
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  std::span<const Vertex> neighbors(Vertex v) const;
  std::size_t degree(Vertex v) const;
  std::size_t max_degree() const noexcept { return max_degree_; }
  bool has_edge(Vertex a, Vertex b) const;
  std::optional<std::size_t> edge_index(Vertex a, Vertex b) const;
  const std::vector<std::string>& labels() const noexcept { return labels_; }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  std::size_t n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::size_t> offsets_{0};
  std::vector<Vertex> adjacency_;
  std::vector<std::string> labels_;
  std::size_t max_degree_ = 0;
};

/// C(G, S) with x ~ x*s. S must be inverse-closed, identity-free, inside G.
Graph cayley_group(const perm::GroupElements& elements, const std::vector<perm::Permutation>& gens);

/// C(Gamma, S) with x ~ s (+) x (left translation). S must be closed under
/// the left inverse and must not contain 0.
Graph cayley_gyro(const gyro::GyroTable& table, const std::vector<gyro::Label>& gens);

/// C_n^k: i ~ j iff the circular distance is at most k. Requires 1 <= k < n/2.
Graph power_cycle(std::size_t n, std::size_t k);

/// Circulant on Z_n; i ~ j iff (j - i) mod n is in the connection set.
Graph circulant(std::size_t n, const std::vector<long long>& connection);

Graph complete(std::size_t n);
Graph cycle(std::size_t n);

/// Residues normalized into 0..n-1, sorted, deduplicated.
std::vector<long long> normalize_residues(std::size_t n, const std::vector<long long>& residues);
bool is_symmetric_residue_set(std::size_t n, const std::vector<long long>& residues);

/// {+-1, ..., +-k} mod n.
std::vector<long long> power_cycle_connection(std::size_t n, std::size_t k);

/**
 * Let pi be the product of `sigma` in order. Returns, for each s in `gens`,
 * the exponent e in [0, ord(pi)) with s = pi^e, or nullopt if some s is not a
 * power of pi.
 */
std::optional<std::vector<std::size_t>> exponent_distribution(
    const perm::GroupElements& elements, const std::vector<perm::Permutation>& sigma,
    const std::vector<perm::Permutation>& gens);

/// Some unit a mod n with a*S1 = S2, validated as an isomorphism of the two
/// circulants by edge-set comparison; nullopt if no unit works.
std::optional<long long> iso_multiplier(std::size_t n, const std::vector<long long>& s1,
                                        const std::vector<long long>& s2);

/// True iff v -> phi[v] maps the edge set of `a` exactly onto that of `b`.
bool is_isomorphism(const Graph& a, const Graph& b, const std::vector<Vertex>& phi);

/// Subgraph induced on `verts`, relabelled 0..|verts|-1 in the given order.
Graph induced(const Graph& g, const std::vector<Vertex>& verts);

/// Every vertex covered exactly once, and every edge is an edge of g.
bool is_perfect_matching(const Graph& g, const std::vector<Edge>& matching);
bool is_regular(const Graph& g, std::size_t degree);

/// Vertices = edges of g, in g.edges() order.
Graph line_graph(const Graph& g);

/// Vertices 0..n-1 are g's vertices, n..n+|E|-1 its edges in g.edges() order.
/// Adjacent vertices, incident edges, and an edge with its endpoints are joined.
Graph total_graph(const Graph& g);

}  // namespace cayley::graph
