// Misra & Gries edge coloring with at most max degree + 1 colors.

#include <algorithm>

#include "cayley/construct.hpp"
#include "cayley/error.hpp"

namespace cayley::construct {

namespace {

using graph::Vertex;

class MisraGries {
 public:
  explicit MisraGries(const Graph& g)
      : g_(g), palette_(static_cast<int>(g.max_degree()) + 1),
        at_(g.n(), std::vector<long>(static_cast<std::size_t>(palette_) + 1, -1)),
        color_(g.edge_count(), 0) {}

  EdgeColoring run() {
    for (const auto& e : g_.edges()) color_edge(e.u, e.v);
    EdgeColoring out;
    for (std::size_t i = 0; i < g_.edge_count(); ++i) out.colors.emplace(g_.edges()[i], color_[i]);
    return out;
  }

 private:
  bool free(Vertex x, int c) const { return at_[x][c] < 0; }

  int first_free(Vertex x) const {
    for (int c = 1; c <= palette_; ++c) {
      if (free(x, c)) return c;
    }
    throw VerificationFailure("Misra-Gries: no free color at a vertex");
  }

  int color_of(Vertex a, Vertex b) const { return color_[*g_.edge_index(a, b)]; }

  void set(Vertex a, Vertex b, int c) {
    const auto idx = *g_.edge_index(a, b);
    if (color_[idx] != 0) {
      at_[a][color_[idx]] = -1;
      at_[b][color_[idx]] = -1;
    }
    color_[idx] = c;
    if (c != 0) {
      at_[a][c] = b;
      at_[b][c] = a;
    }
  }

  void color_edge(Vertex u, Vertex v) {
    // Maximal fan at u starting with v.
    std::vector<Vertex> fan{v};
    std::vector<bool> in_fan(g_.n(), false);
    in_fan[v] = true;
    for (bool grew = true; grew;) {
      grew = false;
      for (auto w : g_.neighbors(u)) {
        if (in_fan[w]) continue;
        const int c = color_of(u, w);
        if (c != 0 && free(fan.back(), c)) {
          fan.push_back(w);
          in_fan[w] = true;
          grew = true;
          break;
        }
      }
    }

    const int c = first_free(u);
    const int d = first_free(fan.back());

    // Invert the cd-path from u (it starts with a d-edge since c is free at u).
    if (c != d) {
      std::vector<std::pair<Vertex, Vertex>> path;
      Vertex x = u;
      int want = d;
      while (!free(x, want)) {
        const auto y = static_cast<Vertex>(at_[x][want]);
        path.emplace_back(x, y);
        x = y;
        want = want == d ? c : d;
      }
      std::vector<int> old;
      for (auto [a, b] : path) old.push_back(color_of(a, b));
      for (auto [a, b] : path) set(a, b, 0);
      for (std::size_t i = 0; i < path.size(); ++i) {
        set(path[i].first, path[i].second, old[i] == c ? d : c);
      }
    }

    // First fan vertex with d free whose prefix is still a fan.
    std::size_t stop = fan.size();
    for (std::size_t i = 0; i < fan.size() && stop == fan.size(); ++i) {
      if (!free(fan[i], d)) continue;
      bool prefix_ok = true;
      for (std::size_t j = 1; j <= i && prefix_ok; ++j) {
        const int cj = color_of(u, fan[j]);
        prefix_ok = cj != 0 && free(fan[j - 1], cj);
      }
      if (prefix_ok) stop = i;
    }
    if (stop == fan.size()) throw VerificationFailure("Misra-Gries: no rotatable fan prefix");

    for (std::size_t j = 0; j < stop; ++j) {
      const int next = color_of(u, fan[j + 1]);
      set(u, fan[j + 1], 0);
      set(u, fan[j], next);
    }
    set(u, fan[stop], d);
  }

  const Graph& g_;
  int palette_;
  std::vector<std::vector<long>> at_;  // at_[x][c] = neighbour via color c, or -1
  std::vector<int> color_;
};

}  // namespace

EdgeColoring misra_gries(const Graph& g) {
  auto out = MisraGries(g).run();
  if (!chroma::verify_edge(g, out).proper) {
    throw VerificationFailure("Misra-Gries produced an improper edge coloring");
  }
  return out;
}

}  // namespace cayley::construct
