#include <algorithm>
#include <array>
#include <bit>
#include <functional>
#include <map>
#include <set>

#include "cayley/construct.hpp"
#include "cayley/error.hpp"

namespace cayley::construct {

using graph::Vertex;
using perm::Permutation;

std::string_view to_string(LiftMethod m) {
  switch (m) {
    case LiftMethod::base_search: return "base search";
    case LiftMethod::literal_plan: return "literal plan";
    case LiftMethod::searched_plan: return "searched plan";
    case LiftMethod::extension_search: return "extension search";
  }
  return "?";
}

Permutation alt_long_cycle(std::size_t n) {
  if (n < 4) throw UsageError("alternating generators need n >= 4");
  const int last = static_cast<int>(n);
  return n % 2 == 0 ? perm::consecutive_cycle(n, 2, last) : perm::consecutive_cycle(n, 1, last);
}

std::vector<Permutation> alt_generators(std::size_t n) {
  auto t = alt_long_cycle(n);
  auto c = perm::cycle(n, {1, 2, 3});
  return {c, c.inverse(), t, t.inverse()};
}

std::vector<int> shift_plan(std::size_t n) {
  if (n < 5) throw UsageError("shift plan needs n >= 5");
  std::vector<int> plan(n, 0);
  if (n % 2 == 0) {
    // n-1 powers of the (n-1)-cycle, then the remainder coset L at 0.
    for (std::size_t i = 1; i + 1 < n; ++i) plan[i] = i % 2 == 1 ? 1 : 2;
    plan[n - 1] = 0;
  } else {
    for (std::size_t i = 1; i < n; ++i) plan[i] = static_cast<int>(i % 3);
    if (n % 3 == 0) plan[n - 1] = 1;
  }
  return plan;
}

namespace {

Permutation restrict_last(const Permutation& p) {
  auto img = p.images();
  return Permutation(std::vector<perm::Point>(img.begin(), img.end() - 1));
}

struct CosetLayout {
  std::vector<std::size_t> coset_of;   // per element of An
  std::vector<std::size_t> base_of;    // index of g in A_{n-1}
  std::size_t cosets = 0;
};

CosetLayout layout(const perm::GroupElements& an, const perm::GroupElements& below, std::size_t n) {
  const auto cosets = perm::coset_decompose(an, alt_long_cycle(n), perm::Side::right,
                                            perm::SubgroupSpec::stabilizer(static_cast<perm::Point>(n - 1)));
  CosetLayout out;
  out.cosets = cosets.size();
  out.coset_of.assign(an.size(), 0);
  out.base_of.assign(an.size(), 0);
  const auto& principal = cosets.front();
  for (std::size_t c = 0; c < cosets.size(); ++c) {
    for (std::size_t r = 0; r < cosets[c].size(); ++r) {
      const auto idx = *an.index_of(cosets[c][r]);
      out.coset_of[idx] = c;
      out.base_of[idx] = *below.index_of(restrict_last(principal[r]));
    }
  }
  return out;
}

VertexColoring apply_plan(const CosetLayout& lay, const VertexColoring& base, const std::vector<int>& plan,
                          int x) {
  VertexColoring out;
  out.colors.resize(lay.coset_of.size());
  for (std::size_t v = 0; v < out.colors.size(); ++v) {
    out.colors[v] = (base.colors[lay.base_of[v]] - 1 + plan[lay.coset_of[v]]) % x + 1;
  }
  return out;
}

}  // namespace

LiftResult lift_alt_coloring(std::size_t n, const VertexColoring& base, const LiftOptions& options) {
  if (n < 5) throw UsageError("lift_alt_coloring needs n >= 5");
  const auto below = perm::enumerate(perm::GroupKind::alternating, n - 1);
  const auto base_graph = graph::cayley_group(below, alt_generators(n - 1));
  if (base.colors.size() != below.size()) throw UsageError("base coloring has the wrong length");
  const auto base_report = chroma::verify_vertex(base_graph, base);
  if (!base_report.proper) throw UsageError("base coloring is improper at " + base_report.witness->first.describe());
  const int x = *std::max_element(base.colors.begin(), base.colors.end());
  if (x < 3 || *std::min_element(base.colors.begin(), base.colors.end()) < 1) {
    throw UsageError("base coloring must use colors 1..x with x >= 3");
  }

  const auto an = perm::enumerate(perm::GroupKind::alternating, n);
  auto g = graph::cayley_group(an, alt_generators(n));
  const auto lay = layout(an, below, n);

  LiftResult out;
  out.colors = x;
  out.literal_plan = shift_plan(n);
  if (out.literal_plan.size() != lay.cosets) {
    throw VerificationFailure("expected " + std::to_string(out.literal_plan.size()) + " cosets, found " +
                              std::to_string(lay.cosets));
  }

  const auto accepted = [&](const VertexColoring& c) { return !options.accept || options.accept(c); };
  const auto finish = [&](VertexColoring c, LiftMethod method) {
    out.report = chroma::verify_vertex(g, c);
    out.coloring = std::move(c);
    out.method = method;
    out.graph = std::move(g);
    return out;
  };

  {
    auto c = apply_plan(lay, base, out.literal_plan, x);
    if (chroma::verify_vertex(g, c).proper && accepted(c)) {
      out.plan = out.literal_plan;
      return finish(std::move(c), LiftMethod::literal_plan);
    }
    out.notes.push_back("literal shift plan leaves a monochromatic edge");
  }

  // Every offset sequence with the principal coset at 0, lexicographically.
  std::vector<int> plan(lay.cosets, 0);
  std::uint64_t tried = 0;
  for (;;) {
    std::size_t pos = lay.cosets - 1;
    while (pos > 0 && plan[pos] == x - 1) plan[pos--] = 0;
    if (pos == 0) break;
    ++plan[pos];
    if (++tried > options.plan_budget) {
      out.notes.push_back("offset plan budget exhausted");
      break;
    }
    auto c = apply_plan(lay, base, plan, x);
    if (chroma::verify_vertex(g, c).proper && accepted(c)) {
      out.plan = plan;
      out.notes.push_back("searched offset plan succeeded");
      return finish(std::move(c), LiftMethod::searched_plan);
    }
  }
  out.notes.push_back("no offset plan lifts this base (" + std::to_string(tried) + " tried)");
  if (!options.allow_extension) {
    throw VerificationFailure("no coset offset plan lifts the base coloring to A" + std::to_string(n));
  }

  // Keep the principal coset as the base coloring and complete the rest.
  std::vector<int> fixed(an.size(), 0);
  for (std::size_t v = 0; v < an.size(); ++v) {
    if (lay.coset_of[v] == 0) fixed[v] = base.colors[lay.base_of[v]];
  }
  oracle::ColoringSearch search(g, options.extension_budget);
  auto found = options.accept
                   ? search.solve_accepting(x, [&](const std::vector<int>& c) { return options.accept({c}); }, fixed)
                   : search.solve(x, fixed);
  if (!found) {
    throw VerificationFailure("the base coloring does not extend to A" + std::to_string(n) + " with " +
                              std::to_string(x) + " colors");
  }
  VertexColoring c{std::move(*found)};
  if (!chroma::verify_vertex(g, c).proper) throw VerificationFailure("extension search returned an improper coloring");
  out.notes.push_back("principal coset kept, remainder found by exact search");
  return finish(std::move(c), LiftMethod::extension_search);
}

namespace {

LiftResult alt_chain(std::size_t n, std::size_t top, const LiftOptions& options) {
  LiftOptions opts = options;
  if (n < top) {
    LiftOptions plain = options;
    plain.accept = nullptr;
    opts.accept = [n, plain](const VertexColoring& c) {
      try {
        lift_alt_coloring(n + 1, c, plain);
        return true;
      } catch (const VerificationFailure&) {
        return false;
      }
    };
  }
  if (n == 4) {
    const auto a4 = perm::enumerate(perm::GroupKind::alternating, 4);
    auto g = graph::cayley_group(a4, alt_generators(4));
    oracle::ColoringSearch search(g, options.extension_budget);
    auto found = opts.accept ? search.solve_accepting(3, [&](const std::vector<int>& c) { return opts.accept({c}); })
                             : search.solve(3);
    if (!found) {
      throw VerificationFailure(opts.accept ? "no 3-coloring of C(A4, S) lifts to A5 with these options"
                                            : "C(A4, S) has no 3-coloring");
    }
    LiftResult out;
    out.method = LiftMethod::base_search;
    out.colors = 3;
    out.coloring.colors = std::move(*found);
    out.report = chroma::verify_vertex(g, out.coloring);
    out.graph = std::move(g);
    if (!out.report.proper) throw VerificationFailure("base search returned an improper coloring");
    return out;
  }
  const auto below = alt_chain(n - 1, top, options);
  return lift_alt_coloring(n, below.coloring, opts);
}

}  // namespace

LiftResult alt_three_coloring(std::size_t n, const LiftOptions& options) {
  if (n < 4) throw UsageError("alt_three_coloring needs n >= 4");
  return alt_chain(n, n, options);
}

// ---------------------------------------------------------------------------
// Five-color total coloring

namespace {

bool equitable(const VertexColoring& c, int classes) {
  std::vector<std::size_t> sizes(static_cast<std::size_t>(classes) + 1, 0);
  for (auto col : c.colors) {
    if (col < 1 || col > classes) return false;
    ++sizes[static_cast<std::size_t>(col)];
  }
  return std::all_of(sizes.begin() + 1, sizes.end(), [&](std::size_t s) { return s == c.colors.size() / 3; }) &&
         c.colors.size() % 3 == 0;
}

// Proper 3-coloring with every class of size n/3: most-constrained vertex
// first, class capacities enforced, first new color only.
class EquitableSearch {
 public:
  using Accept = std::function<bool(const VertexColoring&)>;

  EquitableSearch(const Graph& g, std::uint64_t budget)
      : g_(g), budget_(budget), color_(g.n(), 0), cap_(3, g.n() / 3) {}

  /// First equitable coloring in search order that `accept` takes.
  std::optional<VertexColoring> run(const Accept& accept) {
    if (g_.n() % 3 != 0) return std::nullopt;
    accept_ = &accept;
    if (!dfs(0, 0)) return std::nullopt;
    return VertexColoring{color_};
  }

 private:
  int blocked(Vertex v) const {
    int mask = 0;
    for (auto u : g_.neighbors(v)) {
      if (color_[u]) mask |= 1 << (color_[u] - 1);
    }
    for (int c = 0; c < 3; ++c) {
      if (cap_[c] == 0) mask |= 1 << c;
    }
    return mask;
  }

  bool dfs(std::size_t colored, int used) {
    if (colored == g_.n()) return (*accept_)(VertexColoring{color_});
    if (++nodes_ > budget_) throw BudgetExceeded("equitable coloring search budget exhausted");
    Vertex best = 0;
    int best_free = 4;
    for (Vertex v = 0; v < g_.n(); ++v) {
      if (color_[v]) continue;
      const int free = 3 - std::popcount(static_cast<unsigned>(blocked(v)));
      if (free == 0) return false;
      if (free < best_free) {
        best = v;
        best_free = free;
      }
    }
    const int mask = blocked(best);
    for (int c = 0; c < std::min(3, used + 1); ++c) {
      if ((mask >> c) & 1) continue;
      color_[best] = c + 1;
      --cap_[c];
      if (dfs(colored + 1, std::max(used, c + 1))) return true;
      ++cap_[c];
      color_[best] = 0;
    }
    return false;
  }

  const Graph& g_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  std::vector<int> color_;
  std::vector<std::size_t> cap_;
  const Accept* accept_ = nullptr;
};

// Cycles of a 2-regular graph given by its edge list, as edge-index lists in
// traversal order.
std::vector<std::vector<std::size_t>> cycles_of(std::size_t n, const std::vector<graph::Edge>& edges) {
  std::vector<std::vector<std::size_t>> at(n);
  for (std::size_t i = 0; i < edges.size(); ++i) {
    at[edges[i].u].push_back(i);
    at[edges[i].v].push_back(i);
  }
  std::vector<bool> used(edges.size(), false);
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t start = 0; start < edges.size(); ++start) {
    if (used[start]) continue;
    std::vector<std::size_t> cyc;
    std::size_t e = start;
    Vertex v = edges[start].v;
    while (!used[e]) {
      used[e] = true;
      cyc.push_back(e);
      const auto& inc = at[v];
      const auto next = inc[0] == e ? inc[1] : inc[0];
      v = edges[next].u == v ? edges[next].v : edges[next].u;
      e = next;
    }
    out.push_back(std::move(cyc));
  }
  return out;
}

// Whether every edge not in the chosen matchings lies on an even cycle of the
// remainder, and if so the 4/5 coloring of the remainder.
std::optional<std::map<graph::Edge, int>> two_color_remainder(const Graph& g, const std::set<graph::Edge>& taken) {
  std::vector<graph::Edge> rest;
  for (const auto& e : g.edges()) {
    if (!taken.count(e)) rest.push_back(e);
  }
  std::map<graph::Edge, int> out;
  for (const auto& cyc : cycles_of(g.n(), rest)) {
    if (cyc.size() % 2 == 1) return std::nullopt;
    for (std::size_t i = 0; i < cyc.size(); ++i) out[rest[cyc[i]]] = i % 2 == 0 ? 4 : 5;
  }
  return out;
}

struct EdgeCompletion {
  std::map<graph::Edge, int> colors;
  bool two_regular = false;
  bool used_fallback = false;
  std::vector<std::string> notes;
};

// Edge colors 1..5 around an equitable vertex 3-coloring: alternate matchings
// of the 2-regular cross-class graphs when they are 2-regular, otherwise a
// list edge-coloring search. nullopt if neither finds one.
std::optional<EdgeCompletion> complete_edges(const Graph& g, const VertexColoring& vc, std::uint64_t budget) {
  EdgeCompletion out;
  // Bipartite graphs between pairs of classes, indexed by the missing class.
  std::array<std::vector<graph::Edge>, 3> cross;
  for (const auto& e : g.edges()) {
    const int a = vc.colors[e.u], b = vc.colors[e.v];
    cross[static_cast<std::size_t>(6 - a - b - 1)].push_back(e);
  }
  out.two_regular = true;
  for (Vertex v = 0; v < g.n(); ++v) {
    std::array<int, 4> per{0, 0, 0, 0};
    for (auto u : g.neighbors(v)) ++per[static_cast<std::size_t>(vc.colors[u])];
    for (int c = 1; c <= 3; ++c) {
      if (c != vc.colors[v] && per[static_cast<std::size_t>(c)] != 2) out.two_regular = false;
    }
  }

  if (out.two_regular) {
    // Each cross graph is a union of even cycles; a matching takes every
    // other edge of each, with two choices per cycle.
    std::vector<std::pair<std::size_t, std::vector<graph::Edge>>> all_cycles;
    for (std::size_t i = 0; i < 3; ++i) {
      for (const auto& cyc : cycles_of(g.n(), cross[i])) {
        std::vector<graph::Edge> es;
        for (auto idx : cyc) es.push_back(cross[i][idx]);
        all_cycles.emplace_back(i, std::move(es));
      }
    }
    if (all_cycles.size() < 63) {
      const std::uint64_t limit = std::min<std::uint64_t>(1ULL << all_cycles.size(), budget);
      for (std::uint64_t bits = 0; bits < limit; ++bits) {
        std::set<graph::Edge> taken;
        std::map<graph::Edge, int> colors;
        for (std::size_t c = 0; c < all_cycles.size(); ++c) {
          const auto& [cls, es] = all_cycles[c];
          for (std::size_t j = (bits >> c) & 1U; j < es.size(); j += 2) {
            taken.insert(es[j]);
            colors[es[j]] = static_cast<int>(cls) + 1;
          }
        }
        if (auto rest = two_color_remainder(g, taken)) {
          colors.insert(rest->begin(), rest->end());
          out.colors = std::move(colors);
          return out;
        }
      }
    }
    out.notes.push_back("no choice of alternate matchings leaves only even cycles");
  } else {
    out.notes.push_back("cross-class graphs are not 2-regular");
  }

  // Each edge takes a color from 1..5 other than its endpoints' colors.
  out.used_fallback = true;
  const auto lg = graph::line_graph(g);
  std::vector<std::uint64_t> forbidden(g.edge_count(), 0);
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    const auto& e = g.edges()[i];
    forbidden[i] = (1ULL << (vc.colors[e.u] - 1)) | (1ULL << (vc.colors[e.v] - 1));
  }
  oracle::Budget b;
  b.max_nodes = budget;
  oracle::ColoringSearch search(lg, b);
  auto found = search.solve(5, {}, forbidden);
  if (!found) return std::nullopt;
  for (std::size_t i = 0; i < g.edge_count(); ++i) out.colors[g.edges()[i]] = (*found)[i];
  out.notes.push_back("edges colored by list edge-coloring search");
  return out;
}

}  // namespace

AltTotalResult total_color_alt(std::size_t n, std::uint64_t search_budget) {
  if (n < 4) throw UsageError("total_color_alt needs n >= 4");
  AltTotalResult out;
  const auto an = perm::enumerate(perm::GroupKind::alternating, n);
  auto g = graph::cayley_group(an, alt_generators(n));

  LiftOptions opts;
  opts.extension_budget.max_nodes = search_budget;
  VertexColoring vc = alt_three_coloring(n, opts).coloring;
  std::optional<EdgeCompletion> edges;
  if (equitable(vc, 3)) {
    edges = complete_edges(g, vc, search_budget);
    if (!edges) out.notes.push_back("lifted 3-coloring admits no 5-color edge completion");
  } else {
    out.notes.push_back("lifted 3-coloring is not equitable");
  }
  if (!edges) {
    out.notes.push_back("searched equitable 3-colorings for one that completes");
    auto eq = EquitableSearch(g, search_budget).run([&](const VertexColoring& c) {
      edges = complete_edges(g, c, search_budget);
      return edges.has_value();
    });
    if (!eq) {
      throw VerificationFailure("no equitable 3-coloring of C(A" + std::to_string(n) +
                                ", S) extends to a 5-total coloring");
    }
    vc = std::move(*eq);
  }
  out.equitable = equitable(vc, 3);
  out.cross_classes_two_regular = edges->two_regular;
  out.used_fallback = edges->used_fallback;
  out.notes.insert(out.notes.end(), edges->notes.begin(), edges->notes.end());

  EdgeColoring ec;
  ec.colors = std::move(edges->colors);
  auto t = TotalColorMatrix::from_parts(g.n(), vc, ec);
  auto report = chroma::verify_total(g, t);
  if (!report.proper) throw VerificationFailure("alternating-group total coloring is improper");
  if (report.colors_used != 5) {
    throw VerificationFailure("alternating-group total coloring used " + std::to_string(report.colors_used) +
                              " colors");
  }
  out.graph = std::move(g);
  out.matrix = std::move(t);
  out.report = report;
  return out;
}

}  // namespace cayley::construct
