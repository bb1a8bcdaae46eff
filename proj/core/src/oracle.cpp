#include "cayley/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <string>

#include "cayley/error.hpp"

namespace cayley::oracle {

using graph::Vertex;

Budget Budget::from_env() {
  Budget b;
  if (const char* s = std::getenv("CAYLEY_ORACLE_NODES")) b.max_nodes = std::stoull(s);
  if (const char* s = std::getenv("CAYLEY_ORACLE_SECONDS")) b.max_seconds = std::stod(s);
  if (const char* s = std::getenv("CAYLEY_ORACLE_ELEMENTS")) b.max_elements = std::stoull(s);
  return b;
}

std::string_view to_string(Status s) {
  return s == Status::exact ? "exact" : "budget-exceeded";
}

// ---------------------------------------------------------------------------
// k-colorability

namespace {

class Dsatur {
 public:
  Dsatur(const Graph& g, int k, const std::vector<std::uint64_t>& forbidden,
         const Budget& budget, std::uint64_t& nodes,
         std::chrono::steady_clock::time_point start)
      : g_(g), k_(k), budget_(budget), nodes_(nodes), start_(start),
        color_(g.n(), 0), count_(g.n() * static_cast<std::size_t>(k), 0),
        mask_(g.n(), 0), forbidden_(g.n(), 0) {
    const std::uint64_t all = k == 64 ? ~0ULL : ((1ULL << k) - 1);
    for (std::size_t v = 0; v < g.n(); ++v) {
      forbidden_[v] = v < forbidden.size() ? (forbidden[v] & all) : 0;
    }
  }

  // Returns false if a pinned color clashes.
  bool pin(const std::vector<int>& fixed) {
    for (std::size_t v = 0; v < fixed.size() && v < g_.n(); ++v) {
      if (fixed[v] <= 0) continue;
      const int c = fixed[v] - 1;
      if (c >= k_ || ((mask_[v] | forbidden_[v]) >> c) & 1ULL) return false;
      assign(static_cast<Vertex>(v), c);
      ++colored_;
      pinned_ = true;
      max_used_ = std::max(max_used_, c);
    }
    if (!forbidden_.empty()) {
      for (auto f : forbidden_) {
        if (f) pinned_ = true;
      }
    }
    return true;
  }

  bool run(const ColoringSearch::Accept* accept = nullptr) {
    accept_ = accept;
    return dfs(colored_, max_used_);
  }

  std::vector<int> coloring() const {
    std::vector<int> out(color_.size());
    for (std::size_t v = 0; v < color_.size(); ++v) out[v] = color_[v];
    return out;
  }

 private:
  void assign(Vertex v, int c) {
    color_[v] = c + 1;
    for (auto u : g_.neighbors(v)) {
      auto& cnt = count_[u * static_cast<std::size_t>(k_) + static_cast<std::size_t>(c)];
      if (cnt++ == 0) mask_[u] |= 1ULL << c;
    }
  }

  void unassign(Vertex v, int c) {
    color_[v] = 0;
    for (auto u : g_.neighbors(v)) {
      auto& cnt = count_[u * static_cast<std::size_t>(k_) + static_cast<std::size_t>(c)];
      if (--cnt == 0) mask_[u] &= ~(1ULL << c);
    }
  }

  void tick() {
    ++nodes_;
    if (nodes_ > budget_.max_nodes) throw BudgetExceeded("oracle node budget exhausted");
    if ((nodes_ & 0x3FF) == 0) {
      const std::chrono::duration<double> dt = std::chrono::steady_clock::now() - start_;
      if (dt.count() > budget_.max_seconds) throw BudgetExceeded("oracle time budget exhausted");
    }
  }

  bool dfs(std::size_t colored, int max_used) {
    if (colored == g_.n()) return accept_ == nullptr || (*accept_)(coloring());
    tick();
    // Fewest remaining colors first; ties to the most uncolored neighbours,
    // then the lowest index.
    Vertex best = 0;
    int best_free = k_ + 1;
    std::size_t best_deg = 0;
    for (Vertex v = 0; v < g_.n(); ++v) {
      if (color_[v] != 0) continue;
      const int free = k_ - std::popcount(mask_[v] | forbidden_[v]);
      if (free == 0) return false;
      if (free < best_free || (free == best_free && uncolored_degree(v) > best_deg)) {
        best = v;
        best_free = free;
        best_deg = uncolored_degree(v);
      }
    }
    const std::uint64_t blocked = mask_[best] | forbidden_[best];
    // Without pins the colors are interchangeable, so only one fresh color
    // needs trying.
    const int limit = pinned_ ? k_ - 1 : std::min(k_ - 1, max_used + 1);
    for (int c = 0; c <= limit; ++c) {
      if ((blocked >> c) & 1ULL) continue;
      assign(best, c);
      if (dfs(colored + 1, std::max(max_used, c))) return true;
      unassign(best, c);
    }
    return false;
  }

  std::size_t uncolored_degree(Vertex v) const {
    std::size_t d = 0;
    for (auto u : g_.neighbors(v)) d += color_[u] == 0;
    return d;
  }

  const Graph& g_;
  int k_;
  const Budget& budget_;
  std::uint64_t& nodes_;
  std::chrono::steady_clock::time_point start_;
  std::vector<int> color_;
  std::vector<std::uint16_t> count_;
  std::vector<std::uint64_t> mask_;
  std::vector<std::uint64_t> forbidden_;
  std::size_t colored_ = 0;
  int max_used_ = -1;
  bool pinned_ = false;
  const ColoringSearch::Accept* accept_ = nullptr;
};

}  // namespace

ColoringSearch::ColoringSearch(const Graph& g, Budget budget)
    : g_(g), budget_(budget), start_(std::chrono::steady_clock::now()) {}

std::optional<std::vector<int>> ColoringSearch::solve(int k, const std::vector<int>& fixed,
                                                      const std::vector<std::uint64_t>& forbidden) {
  if (k < 0 || k > 64) throw UsageError("color search supports 0..64 colors");
  if (g_.n() == 0) return std::vector<int>{};
  if (k == 0) return std::nullopt;
  Dsatur search(g_, k, forbidden, budget_, nodes_, start_);
  if (!search.pin(fixed)) return std::nullopt;
  if (!search.run()) return std::nullopt;
  return search.coloring();
}

std::optional<std::vector<int>> ColoringSearch::solve_accepting(int k, const Accept& accept,
                                                                const std::vector<int>& fixed,
                                                                const std::vector<std::uint64_t>& forbidden) {
  if (k < 0 || k > 64) throw UsageError("color search supports 0..64 colors");
  if (k == 0) return std::nullopt;
  Dsatur search(g_, k, forbidden, budget_, nodes_, start_);
  if (!search.pin(fixed)) return std::nullopt;
  if (!search.run(&accept)) return std::nullopt;
  return search.coloring();
}

// ---------------------------------------------------------------------------
// Maximum clique: branch and bound with a greedy-coloring bound.

namespace {

class Bitset {
 public:
  explicit Bitset(std::size_t n = 0) : n_(n), words_((n + 63) / 64, 0) {}
  void set(std::size_t i) { words_[i / 64] |= 1ULL << (i % 64); }
  void reset(std::size_t i) { words_[i / 64] &= ~(1ULL << (i % 64)); }
  bool test(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1ULL; }
  bool none() const {
    return std::all_of(words_.begin(), words_.end(), [](auto w) { return w == 0; });
  }
  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  Bitset operator&(const Bitset& o) const {
    Bitset r(n_);
    for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] = words_[i] & o.words_[i];
    return r;
  }
  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      auto bits = words_[w];
      while (bits) {
        const auto b = static_cast<std::size_t>(std::countr_zero(bits));
        f(w * 64 + b);
        bits &= bits - 1;
      }
    }
  }

 private:
  std::size_t n_;
  std::vector<std::uint64_t> words_;
};

class CliqueSearch {
 public:
  CliqueSearch(const Graph& g, const Budget& budget)
      : g_(g), budget_(budget), start_(std::chrono::steady_clock::now()), adj_(g.n(), Bitset(g.n())) {
    // Relabel by non-increasing degree for a tighter coloring bound.
    order_.resize(g.n());
    for (Vertex v = 0; v < g.n(); ++v) order_[v] = v;
    std::stable_sort(order_.begin(), order_.end(),
                     [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
    std::vector<std::size_t> pos(g.n());
    for (std::size_t i = 0; i < order_.size(); ++i) pos[order_[i]] = i;
    for (const auto& e : g.edges()) {
      adj_[pos[e.u]].set(pos[e.v]);
      adj_[pos[e.v]].set(pos[e.u]);
    }
  }

  std::vector<Vertex> run() {
    Bitset all(g_.n());
    for (std::size_t i = 0; i < g_.n(); ++i) all.set(i);
    expand(all);
    std::vector<Vertex> out;
    for (auto i : best_) out.push_back(order_[i]);
    std::sort(out.begin(), out.end());
    return out;
  }

  std::uint64_t nodes() const { return nodes_; }

 private:
  void expand(Bitset candidates) {
    ++nodes_;
    if (nodes_ > budget_.max_nodes) throw BudgetExceeded("clique search node budget exhausted");
    if ((nodes_ & 0x3FF) == 0) {
      const std::chrono::duration<double> dt = std::chrono::steady_clock::now() - start_;
      if (dt.count() > budget_.max_seconds) throw BudgetExceeded("clique search time budget exhausted");
    }
    // Greedy sequential coloring of the candidates gives per-vertex bounds.
    std::vector<std::size_t> verts;
    std::vector<std::size_t> bound;
    {
      Bitset uncolored = candidates;
      std::size_t color = 0;
      while (!uncolored.none()) {
        ++color;
        Bitset q = uncolored;
        while (!q.none()) {
          std::size_t v = 0;
          bool found = false;
          q.for_each([&](std::size_t i) {
            if (!found) {
              v = i;
              found = true;
            }
          });
          q.reset(v);
          uncolored.reset(v);
          // Remove neighbours of v from q.
          adj_[v].for_each([&](std::size_t u) { q.reset(u); });
          verts.push_back(v);
          bound.push_back(color);
        }
      }
    }
    for (std::size_t idx = verts.size(); idx-- > 0;) {
      if (current_.size() + bound[idx] <= best_.size()) return;
      const auto v = verts[idx];
      current_.push_back(v);
      Bitset next = candidates & adj_[v];
      if (next.none()) {
        if (current_.size() > best_.size()) best_ = current_;
      } else {
        expand(next);
      }
      current_.pop_back();
      candidates.reset(v);
    }
  }

  const Graph& g_;
  const Budget& budget_;
  std::chrono::steady_clock::time_point start_;
  std::vector<Bitset> adj_;
  std::vector<Vertex> order_;
  std::vector<std::size_t> current_, best_;
  std::uint64_t nodes_ = 0;
};

Graph complement(const Graph& g) {
  std::vector<graph::Edge> edges;
  for (Vertex i = 0; i < g.n(); ++i) {
    for (Vertex j = i + 1; j < g.n(); ++j) {
      if (!g.has_edge(i, j)) edges.emplace_back(i, j);
    }
  }
  return Graph(g.n(), std::move(edges));
}

void check_size(std::size_t elements, const Budget& budget, OracleResult& r) {
  if (elements > budget.max_elements) r.status = Status::budget_exceeded;
}

}  // namespace

std::vector<Vertex> max_clique(const Graph& g, const Budget& budget, std::uint64_t* nodes) {
  if (g.n() == 0) return {};
  CliqueSearch s(g, budget);
  auto out = s.run();
  if (nodes) *nodes = s.nodes();
  return out;
}

std::vector<int> dsatur_greedy(const Graph& g) {
  std::vector<int> color(g.n(), 0);
  std::vector<std::vector<bool>> seen(g.n());
  std::vector<int> sat(g.n(), 0);
  for (std::size_t step = 0; step < g.n(); ++step) {
    Vertex best = 0;
    int best_sat = -1;
    std::size_t best_deg = 0;
    for (Vertex v = 0; v < g.n(); ++v) {
      if (color[v] != 0) continue;
      if (sat[v] > best_sat || (sat[v] == best_sat && g.degree(v) > best_deg)) {
        best = v;
        best_sat = sat[v];
        best_deg = g.degree(v);
      }
    }
    int c = 1;
    while (static_cast<std::size_t>(c) < seen[best].size() && seen[best][c]) ++c;
    color[best] = c;
    for (auto u : g.neighbors(best)) {
      if (seen[u].size() <= static_cast<std::size_t>(c)) seen[u].resize(c + 1, false);
      if (!seen[u][c]) {
        seen[u][c] = true;
        ++sat[u];
      }
    }
  }
  return color;
}

OracleResult chromatic_number(const Graph& g, const Budget& budget) {
  OracleResult r;
  check_size(g.n(), budget, r);
  if (r.status == Status::budget_exceeded || g.n() == 0) return r;

  auto greedy = dsatur_greedy(g);
  r.upper_bound = *std::max_element(greedy.begin(), greedy.end());
  try {
    std::uint64_t clique_nodes = 0;
    r.lower_bound = static_cast<int>(max_clique(g, budget, &clique_nodes).size());
    r.nodes_explored += clique_nodes;
  } catch (const BudgetExceeded&) {
    r.lower_bound = g.edge_count() > 0 ? 2 : 1;
  }

  ColoringSearch search(g, budget);
  try {
    r.value = r.upper_bound;
    r.witness = greedy;
    std::uint64_t last_infeasible_nodes = 0;
    bool tested_below = false;
    for (int k = r.lower_bound; k < r.upper_bound; ++k) {
      const auto before = search.nodes();
      if (auto found = search.solve(k)) {
        r.value = k;
        r.witness = std::move(*found);
        break;
      }
      last_infeasible_nodes = search.nodes() - before;
      tested_below = true;
    }
    if (tested_below && r.value > r.lower_bound) {
      r.certification_nodes = last_infeasible_nodes;
    } else if (r.value > 1) {
      const auto before = search.nodes();
      if (search.solve(r.value - 1)) {
        throw VerificationFailure("chromatic search found a coloring below its own optimum");
      }
      r.certification_nodes = search.nodes() - before;
    }
    r.lower_bound = r.upper_bound = r.value;
  } catch (const BudgetExceeded&) {
    r.status = Status::budget_exceeded;
  }
  r.nodes_explored += search.nodes();
  return r;
}

OracleResult chromatic_index(const Graph& g, const Budget& budget) {
  OracleResult r;
  check_size(g.edge_count(), budget, r);
  if (r.status == Status::budget_exceeded) return r;
  return chromatic_number(graph::line_graph(g), budget);
}

OracleResult total_chromatic_number(const Graph& g, const Budget& budget) {
  OracleResult r;
  check_size(g.n() + g.edge_count(), budget, r);
  if (r.status == Status::budget_exceeded) return r;
  return chromatic_number(graph::total_graph(g), budget);
}

OracleResult independence_number(const Graph& g, const Budget& budget) {
  OracleResult r;
  check_size(g.n(), budget, r);
  if (r.status == Status::budget_exceeded || g.n() == 0) return r;
  try {
    std::uint64_t nodes = 0;
    auto set = max_clique(complement(g), budget, &nodes);
    r.value = static_cast<int>(set.size());
    r.witness.assign(set.begin(), set.end());
    r.nodes_explored = nodes;
    r.certification_nodes = nodes;
    r.lower_bound = r.upper_bound = r.value;
  } catch (const BudgetExceeded&) {
    r.status = Status::budget_exceeded;
  }
  return r;
}

}  // namespace cayley::oracle
