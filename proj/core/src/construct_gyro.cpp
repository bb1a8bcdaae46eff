// Colorings of Cayley graphs on the 2-gyrogroup. T1 and T2 each induce a
// copy of circulant(m, S1) (residues line up), and every T2 generator
// contributes a perfect matching, so the circulant coloring is reused on both
// halves and the matchings are handled separately.

#include <algorithm>
#include <numeric>

#include "cayley/construct.hpp"
#include "cayley/error.hpp"

namespace cayley::construct {

using gyro::GyroTable;
using gyro::Label;
using graph::Vertex;

std::vector<Label> gyro_generators(const GyroTable& t, const std::vector<long long>& s1) {
  const auto m = t.m();
  const auto residues = graph::normalize_residues(m, s1);
  if (!graph::is_symmetric_residue_set(m, residues)) throw UsageError("S1 is not symmetric mod m");
  std::vector<Label> gens;
  for (auto r : residues) {
    if (r == 0) throw UsageError("S1 contains 0");
    gens.push_back(static_cast<Label>(r));
  }
  gens.push_back(t.half_reflection());
  return gens;
}

namespace {

struct Split {
  std::vector<long long> s1;      // T1 generators as residues
  std::vector<Label> reflections; // T2 generators
  Graph circ;
};

Split split_generators(const GyroTable& t, const std::vector<Label>& gens) {
  Split out;
  for (auto s : gens) {
    if (t.in_t1(s)) {
      out.s1.push_back(s);
    } else {
      out.reflections.push_back(s);
    }
  }
  out.circ = graph::circulant(t.m(), out.s1);
  return out;
}

// Confirms that the edges of g inside T1 and inside T2 are exactly the
// circulant's edges (on residues); throws otherwise.
void check_halves(const GyroTable& t, const Graph& g, const Graph& circ) {
  const auto m = static_cast<Vertex>(t.m());
  std::vector<graph::Edge> lower, upper;
  for (const auto& e : g.edges()) {
    if (e.v < m) {
      lower.push_back(e);
    } else if (e.u >= m) {
      upper.emplace_back(e.u - m, e.v - m);
    }
  }
  std::sort(upper.begin(), upper.end());
  if (lower != circ.edges() || upper != circ.edges()) {
    throw VerificationFailure("T1/T2 halves of the gyrogroup graph are not copies of circulant(m, S1)");
  }
}

// Edges of g joining T1 to T2.
std::vector<graph::Edge> cross_edges(const GyroTable& t, const Graph& g) {
  const auto m = static_cast<Vertex>(t.m());
  std::vector<graph::Edge> out;
  for (const auto& e : g.edges()) {
    if (e.u < m && e.v >= m) out.push_back(e);
  }
  return out;
}

// First permutation pi of 1..k (lexicographic) with color[a] != pi(color[b-m])
// on every cross edge {a, b}.
std::optional<std::vector<int>> class_permutation(const std::vector<int>& colors, int k,
                                                  const std::vector<graph::Edge>& cross, Vertex m) {
  std::vector<int> pi(static_cast<std::size_t>(k) + 1);
  std::iota(pi.begin(), pi.end(), 0);
  do {
    const bool ok = std::all_of(cross.begin(), cross.end(), [&](const graph::Edge& e) {
      return colors[e.u] != pi[static_cast<std::size_t>(colors[e.v - m])];
    });
    if (ok) return pi;
  } while (std::next_permutation(pi.begin() + 1, pi.end()));
  return std::nullopt;
}

int max_color(const std::vector<int>& colors) {
  return colors.empty() ? 0 : *std::max_element(colors.begin(), colors.end());
}

}  // namespace

GyroVertexResult gyro_vertex_color(const GyroTable& t, const std::vector<long long>& s1,
                                   const oracle::Budget& budget) {
  const auto gens = gyro_generators(t, s1);
  auto g = graph::cayley_gyro(t, gens);
  const auto split = split_generators(t, gens);
  check_halves(t, g, split.circ);
  const auto m = static_cast<Vertex>(t.m());

  GyroVertexResult out;
  std::vector<int> base;
  try {
    auto r = oracle::chromatic_number(split.circ, budget);
    base = r.witness;
    out.circulant_exact = r.status == oracle::Status::exact;
  } catch (const BudgetExceeded&) {
    base = oracle::dsatur_greedy(split.circ);
    out.notes.push_back("circulant colored greedily; oracle budget exhausted");
  }
  const int k = max_color(base);
  out.circulant_chromatic = k;

  VertexColoring c;
  c.colors.assign(g.n(), 0);
  std::copy(base.begin(), base.end(), c.colors.begin());
  const auto cross = cross_edges(t, g);
  std::vector<int> doubled(g.n(), 0);
  for (Vertex v = 0; v < m; ++v) doubled[v] = base[v];
  for (Vertex v = 0; v < m; ++v) doubled[v + m] = base[v];
  if (auto pi = class_permutation(doubled, k, cross, m)) {
    for (Vertex v = 0; v < m; ++v) c.colors[v + m] = (*pi)[static_cast<std::size_t>(base[v])];
    out.permutation_found = true;
  } else {
    // Keep T1, search T2 freely with the same number of colors.
    out.notes.push_back("no class permutation separates the reflection matching; repaired T2 by search");
    std::vector<int> fixed(g.n(), 0);
    for (Vertex v = 0; v < m; ++v) fixed[v] = base[v];
    oracle::ColoringSearch search(g, budget);
    auto found = search.solve(k, fixed);
    if (!found) {
      throw VerificationFailure("T2 cannot be colored with " + std::to_string(k) +
                                " colors around the T1 coloring");
    }
    c.colors = std::move(*found);
  }

  out.report = chroma::verify_vertex(g, c);
  if (!out.report.proper) throw VerificationFailure("gyrogroup vertex coloring is improper");
  if (g.n() <= budget.max_elements) {
    try {
      auto r = oracle::chromatic_number(g, budget);
      out.graph_chromatic = r.value;
    } catch (const BudgetExceeded&) {
      out.notes.push_back("oracle chi(G) not affordable");
    }
  }
  out.graph = std::move(g);
  out.coloring = std::move(c);
  return out;
}

GyroTotalResult gyro_total_color(const GyroTable& t, const std::vector<long long>& s1,
                                 const oracle::Budget& budget) {
  const auto gens = gyro_generators(t, s1);
  auto g = graph::cayley_gyro(t, gens);
  const auto split = split_generators(t, gens);
  check_halves(t, g, split.circ);
  const auto m = static_cast<Vertex>(t.m());
  const auto& circ = split.circ;

  GyroTotalResult out;
  auto r = oracle::total_chromatic_number(circ, budget);
  out.circulant_total = r.value;
  const std::vector<int> vertex_colors(r.witness.begin(), r.witness.begin() + m);
  const int k = r.value;
  out.matching_color = k + 1;

  std::vector<int> doubled(g.n(), 0);
  for (Vertex v = 0; v < m; ++v) doubled[v] = doubled[v + m] = vertex_colors[v];
  const auto cross = cross_edges(t, g);
  auto pi = class_permutation(doubled, k, cross, m);

  TotalColorMatrix mat(g.n());
  if (pi) {
    for (Vertex v = 0; v < m; ++v) {
      mat.set(v, v, vertex_colors[v]);
      mat.set(v + m, v + m, (*pi)[static_cast<std::size_t>(vertex_colors[v])]);
    }
    for (std::size_t i = 0; i < circ.edge_count(); ++i) {
      const auto& e = circ.edges()[i];
      const int col = r.witness[m + i];
      mat.set(e.u, e.v, col);
      mat.set(e.u + m, e.v + m, (*pi)[static_cast<std::size_t>(col)]);
    }
    for (const auto& e : cross) mat.set(e.u, e.v, out.matching_color);
  } else {
    // Pin T1 and the matching, search the T2 half in the total graph.
    out.notes.push_back("no class permutation separates the reflection matching; repaired T2 by search");
    const auto tg = graph::total_graph(g);
    std::vector<int> fixed(tg.n(), 0);
    for (Vertex v = 0; v < m; ++v) fixed[v] = vertex_colors[v];
    for (std::size_t i = 0; i < g.edge_count(); ++i) {
      const auto& e = g.edges()[i];
      if (e.v < m) {
        fixed[g.n() + i] = r.witness[m + *circ.edge_index(e.u, e.v)];
      } else if (e.u < m) {
        fixed[g.n() + i] = out.matching_color;
      }
    }
    oracle::ColoringSearch search(tg, budget);
    auto found = search.solve(k + 1, fixed);
    if (!found) throw VerificationFailure("T2 half cannot be total-colored around T1");
    for (Vertex v = 0; v < g.n(); ++v) mat.set(v, v, (*found)[v]);
    for (std::size_t i = 0; i < g.edge_count(); ++i) {
      mat.set(g.edges()[i].u, g.edges()[i].v, (*found)[g.n() + i]);
    }
  }

  out.report = chroma::verify_total(g, mat);
  if (!out.report.proper) throw VerificationFailure("gyrogroup total coloring is improper");
  out.within_tcc = out.report.colors_used <= g.max_degree() + 2;
  out.type_i = out.report.colors_used == g.max_degree() + 1;
  out.graph = std::move(g);
  out.matrix = std::move(mat);
  return out;
}

GyroEdgeResult gyro_edge_color(const GyroTable& t, const std::vector<Label>& gens, const oracle::Budget& budget) {
  auto g = graph::cayley_gyro(t, gens);
  const auto split = split_generators(t, gens);
  check_halves(t, g, split.circ);
  const auto m = static_cast<Vertex>(t.m());
  const auto& circ = split.circ;

  GyroEdgeResult out;
  std::vector<int> circ_colors;
  if (circ.edge_count() > 0) {
    try {
      auto r = oracle::chromatic_index(circ, budget);
      circ_colors = r.witness;
      out.circulant_exact = true;
    } catch (const BudgetExceeded&) {
      auto mg = misra_gries(circ);
      for (const auto& e : circ.edges()) circ_colors.push_back(mg.colors.at(e));
      out.notes.push_back("circulant edge-colored by Misra-Gries; oracle budget exhausted");
    }
  }
  const int palette = max_color(circ_colors);

  EdgeColoring ec;
  for (std::size_t i = 0; i < circ.edge_count(); ++i) {
    const auto& e = circ.edges()[i];
    ec.colors[e] = circ_colors[i];
    ec.colors[graph::Edge(e.u + m, e.v + m)] = circ_colors[i];
  }
  int next = palette;
  for (auto s : split.reflections) {
    std::vector<graph::Edge> matching;
    for (Label x = 0; x < t.order(); ++x) {
      matching.emplace_back(x, t.add(s, x));
    }
    std::sort(matching.begin(), matching.end());
    matching.erase(std::unique(matching.begin(), matching.end()), matching.end());
    if (!graph::is_perfect_matching(g, matching)) {
      throw VerificationFailure("reflection " + std::to_string(s) + " does not give a perfect matching");
    }
    ++next;
    for (const auto& e : matching) {
      if (!ec.colors.emplace(e, next).second) {
        throw VerificationFailure("reflection " + std::to_string(s) + " repeats an edge of another generator");
      }
    }
    out.reflection_colors.push_back(next);
  }

  out.report = chroma::verify_edge(g, ec);
  if (!out.report.proper) throw VerificationFailure("gyrogroup edge coloring is improper");
  out.class_i = out.report.colors_used == g.max_degree();
  out.graph = std::move(g);
  out.coloring = std::move(ec);
  return out;
}

}  // namespace cayley::construct
