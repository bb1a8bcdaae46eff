#include "cayley/graph.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "cayley/error.hpp"

namespace cayley::graph {

Graph::Graph(std::size_t n, std::vector<Edge> edges, std::vector<std::string> labels)
    : n_(n), edges_(std::move(edges)), labels_(std::move(labels)) {
  for (const auto& e : edges_) {
    if (e.u == e.v) throw UsageError("loop at vertex " + std::to_string(e.u));
    if (e.v >= n_) {
      throw UsageError("edge {" + std::to_string(e.u) + "," + std::to_string(e.v) +
                       "} out of range for n=" + std::to_string(n_));
    }
  }
  if (!labels_.empty() && labels_.size() != n_) {
    throw UsageError("label count does not match vertex count");
  }
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());

  std::vector<std::size_t> deg(n_, 0);
  for (const auto& e : edges_) {
    ++deg[e.u];
    ++deg[e.v];
  }
  offsets_.assign(n_ + 1, 0);
  for (std::size_t v = 0; v < n_; ++v) offsets_[v + 1] = offsets_[v] + deg[v];
  adjacency_.resize(offsets_[n_]);
  std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
  for (const auto& e : edges_) {
    adjacency_[fill[e.u]++] = e.v;
    adjacency_[fill[e.v]++] = e.u;
  }
  for (std::size_t v = 0; v < n_; ++v) {
    std::sort(adjacency_.begin() + static_cast<std::ptrdiff_t>(offsets_[v]),
              adjacency_.begin() + static_cast<std::ptrdiff_t>(offsets_[v + 1]));
  }
  max_degree_ = n_ == 0 ? 0 : *std::max_element(deg.begin(), deg.end());
}

std::span<const Vertex> Graph::neighbors(Vertex v) const {
  if (v >= n_) throw UsageError("vertex " + std::to_string(v) + " out of range");
  return {adjacency_.data() + offsets_[v], offsets_[v + 1] - offsets_[v]};
}

std::size_t Graph::degree(Vertex v) const { return neighbors(v).size(); }

bool Graph::has_edge(Vertex a, Vertex b) const {
  if (a >= n_ || b >= n_) return false;
  auto nb = neighbors(a);
  return std::binary_search(nb.begin(), nb.end(), b);
}

std::optional<std::size_t> Graph::edge_index(Vertex a, Vertex b) const {
  if (a == b) return std::nullopt;
  Edge e(a, b);
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
  if (it == edges_.end() || *it != e) return std::nullopt;
  return static_cast<std::size_t>(it - edges_.begin());
}

Graph cayley_group(const perm::GroupElements& elements, const std::vector<perm::Permutation>& gens) {
  for (const auto& s : gens) {
    if (s.degree() != elements.degree() || !elements.contains(s)) {
      throw UsageError("generator " + s.to_cycles() + " is not in the group");
    }
    if (s.is_identity()) throw UsageError("generating set contains the identity");
    if (std::find(gens.begin(), gens.end(), s.inverse()) == gens.end()) {
      throw UsageError("generating set is not symmetric: missing inverse of " + s.to_cycles());
    }
  }
  std::vector<Edge> edges;
  std::vector<std::string> labels;
  labels.reserve(elements.size());
  for (std::size_t i = 0; i < elements.size(); ++i) {
    labels.push_back(elements[i].to_cycles());
    for (const auto& s : gens) {
      auto j = elements.index_of(elements[i] * s);
      edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(*j));
    }
  }
  return Graph(elements.size(), std::move(edges), std::move(labels));
}

Graph cayley_gyro(const gyro::GyroTable& table, const std::vector<gyro::Label>& gens) {
  const auto n = table.order();
  for (auto s : gens) {
    if (s >= n) throw UsageError("generator " + std::to_string(s) + " out of range");
    if (s == 0) throw UsageError("generating set contains the identity 0");
    auto inv = table.left_inverse(s);
    if (!inv || std::find(gens.begin(), gens.end(), *inv) == gens.end()) {
      throw UsageError("generating set is not symmetric: missing the inverse of " +
                       std::to_string(s));
    }
  }
  std::vector<Edge> edges;
  std::vector<std::string> labels;
  for (gyro::Label x = 0; x < n; ++x) {
    labels.push_back(std::to_string(x));
    for (auto s : gens) {
      auto y = table.add(s, x);
      if (y == x) throw VerificationFailure("left translation by a nonzero generator has a fixed point");
      edges.emplace_back(x, y);
    }
  }
  return Graph(n, std::move(edges), std::move(labels));
}

std::vector<long long> normalize_residues(std::size_t n, const std::vector<long long>& residues) {
  const auto nn = static_cast<long long>(n);
  std::vector<long long> out;
  out.reserve(residues.size());
  for (auto r : residues) out.push_back(((r % nn) + nn) % nn);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool is_symmetric_residue_set(std::size_t n, const std::vector<long long>& residues) {
  auto set = normalize_residues(n, residues);
  const auto nn = static_cast<long long>(n);
  return std::all_of(set.begin(), set.end(), [&](long long r) {
    return std::binary_search(set.begin(), set.end(), (nn - r) % nn);
  });
}

std::vector<long long> power_cycle_connection(std::size_t n, std::size_t k) {
  std::vector<long long> conn;
  for (std::size_t d = 1; d <= k; ++d) {
    conn.push_back(static_cast<long long>(d));
    conn.push_back(-static_cast<long long>(d));
  }
  return normalize_residues(n, conn);
}

Graph circulant(std::size_t n, const std::vector<long long>& connection) {
  if (n == 0) throw UsageError("circulant needs at least one vertex");
  auto conn = normalize_residues(n, connection);
  if (!conn.empty() && conn.front() == 0) throw UsageError("connection set contains 0");
  if (!is_symmetric_residue_set(n, conn)) throw UsageError("connection set is not symmetric mod n");
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i) {
    for (auto d : conn) {
      edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>((i + static_cast<std::size_t>(d)) % n));
    }
  }
  return Graph(n, std::move(edges));
}

Graph power_cycle(std::size_t n, std::size_t k) {
  if (k < 1 || 2 * k >= n) {
    throw UsageError("power of cycle needs 1 <= k < n/2 (n=" + std::to_string(n) +
                     ", k=" + std::to_string(k) + ")");
  }
  return circulant(n, power_cycle_connection(n, k));
}

Graph complete(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  }
  return Graph(n, std::move(edges));
}

Graph cycle(std::size_t n) {
  if (n < 3) throw UsageError("a cycle needs at least 3 vertices");
  return circulant(n, {1, -1});
}

std::optional<std::vector<std::size_t>> exponent_distribution(
    const perm::GroupElements& elements, const std::vector<perm::Permutation>& sigma,
    const std::vector<perm::Permutation>& gens) {
  if (sigma.empty()) return std::nullopt;
  auto pi = perm::Permutation::identity(elements.degree());
  for (const auto& s : sigma) pi = pi * s;
  const auto ord = pi.order();
  std::vector<perm::Permutation> powers;
  powers.reserve(ord);
  for (std::size_t e = 0; e < ord; ++e) powers.push_back(pi.pow(static_cast<long long>(e)));
  std::vector<std::size_t> out;
  for (const auto& s : gens) {
    auto it = std::find(powers.begin(), powers.end(), s);
    if (it == powers.end()) return std::nullopt;
    out.push_back(static_cast<std::size_t>(it - powers.begin()));
  }
  return out;
}

bool is_isomorphism(const Graph& a, const Graph& b, const std::vector<Vertex>& phi) {
  if (a.n() != b.n() || phi.size() != a.n() || a.edge_count() != b.edge_count()) return false;
  std::vector<bool> hit(a.n(), false);
  for (auto v : phi) {
    if (v >= a.n() || hit[v]) return false;
    hit[v] = true;
  }
  std::vector<Edge> mapped;
  mapped.reserve(a.edge_count());
  for (const auto& e : a.edges()) mapped.emplace_back(phi[e.u], phi[e.v]);
  std::sort(mapped.begin(), mapped.end());
  return mapped == b.edges();
}

std::optional<long long> iso_multiplier(std::size_t n, const std::vector<long long>& s1,
                                        const std::vector<long long>& s2) {
  const auto a_set = normalize_residues(n, s1);
  const auto b_set = normalize_residues(n, s2);
  if (!is_symmetric_residue_set(n, a_set) || !is_symmetric_residue_set(n, b_set)) {
    throw UsageError("iso_multiplier needs symmetric connection sets");
  }
  if (a_set.size() != b_set.size()) return std::nullopt;
  const auto nn = static_cast<long long>(n);
  for (long long a = 1; a < nn || (nn == 1 && a == 1); ++a) {
    if (std::gcd(a, nn) != 1) continue;
    std::vector<long long> scaled;
    for (auto s : a_set) scaled.push_back(s * a);
    if (normalize_residues(n, scaled) != b_set) continue;
    std::vector<Vertex> phi(n);
    for (std::size_t x = 0; x < n; ++x) phi[x] = static_cast<Vertex>((static_cast<long long>(x) * a) % nn);
    if (!is_isomorphism(circulant(n, a_set), circulant(n, b_set), phi)) {
      throw VerificationFailure("multiplier " + std::to_string(a) +
                                " maps the connection sets but not the edge sets");
    }
    return a;
  }
  return std::nullopt;
}

Graph induced(const Graph& g, const std::vector<Vertex>& verts) {
  std::vector<long> pos(g.n(), -1);
  for (std::size_t i = 0; i < verts.size(); ++i) {
    if (verts[i] >= g.n()) throw UsageError("vertex " + std::to_string(verts[i]) + " out of range");
    if (pos[verts[i]] >= 0) throw UsageError("vertex listed twice in induced()");
    pos[verts[i]] = static_cast<long>(i);
  }
  std::vector<Edge> edges;
  for (const auto& e : g.edges()) {
    if (pos[e.u] >= 0 && pos[e.v] >= 0) {
      edges.emplace_back(static_cast<Vertex>(pos[e.u]), static_cast<Vertex>(pos[e.v]));
    }
  }
  std::vector<std::string> labels;
  if (!g.labels().empty()) {
    for (auto v : verts) labels.push_back(g.labels()[v]);
  }
  return Graph(verts.size(), std::move(edges), std::move(labels));
}

bool is_perfect_matching(const Graph& g, const std::vector<Edge>& matching) {
  if (g.n() % 2 != 0 || matching.size() * 2 != g.n()) return false;
  std::vector<bool> covered(g.n(), false);
  for (const auto& e : matching) {
    if (e.v >= g.n()) throw UsageError("matching edge out of range");
    if (!g.has_edge(e.u, e.v) || covered[e.u] || covered[e.v]) return false;
    covered[e.u] = covered[e.v] = true;
  }
  return true;
}

bool is_regular(const Graph& g, std::size_t degree) {
  for (Vertex v = 0; v < g.n(); ++v) {
    if (g.degree(v) != degree) return false;
  }
  return true;
}

Graph line_graph(const Graph& g) {
  std::vector<Edge> edges;
  std::vector<std::vector<Vertex>> incident(g.n());
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    incident[g.edges()[i].u].push_back(static_cast<Vertex>(i));
    incident[g.edges()[i].v].push_back(static_cast<Vertex>(i));
  }
  for (const auto& inc : incident) {
    for (std::size_t a = 0; a < inc.size(); ++a) {
      for (std::size_t b = a + 1; b < inc.size(); ++b) edges.emplace_back(inc[a], inc[b]);
    }
  }
  return Graph(g.edge_count(), std::move(edges));
}

Graph total_graph(const Graph& g) {
  const auto n = static_cast<Vertex>(g.n());
  std::vector<Edge> edges(g.edges());
  std::vector<std::vector<Vertex>> incident(g.n());
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    const auto node = n + static_cast<Vertex>(i);
    const auto& e = g.edges()[i];
    edges.emplace_back(e.u, node);
    edges.emplace_back(e.v, node);
    incident[e.u].push_back(node);
    incident[e.v].push_back(node);
  }
  for (const auto& inc : incident) {
    for (std::size_t a = 0; a < inc.size(); ++a) {
      for (std::size_t b = a + 1; b < inc.size(); ++b) edges.emplace_back(inc[a], inc[b]);
    }
  }
  return Graph(g.n() + g.edge_count(), std::move(edges));
}

}  // namespace cayley::graph
