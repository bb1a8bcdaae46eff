#include <doctest.h>

#include <random>

#include "cayley/chroma.hpp"
#include "cayley/construct.hpp"
#include "cayley/error.hpp"
#include "cayley/oracle.hpp"
#include "naive.hpp"

using namespace cayley;
using oracle::Status;

namespace {

graph::Graph prism() {
  return graph::cayley_group(perm::enumerate(perm::GroupKind::symmetric, 3), construct::sym_generators(3));
}

graph::Graph random_graph(std::size_t n, double p, std::mt19937& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<graph::Edge> e;
  for (graph::Vertex a = 0; a < n; ++a)
    for (graph::Vertex b = a + 1; b < n; ++b)
      if (coin(rng)) e.emplace_back(a, b);
  return graph::Graph(n, e);
}

void check_vertex_witness(const graph::Graph& g, const oracle::OracleResult& r) {
  REQUIRE(r.status == Status::exact);
  const auto rep = chroma::verify_vertex(g, {r.witness});
  CHECK(rep.proper);
  CHECK(static_cast<int>(rep.colors_used) == r.value);
}

void check_total_witness(const graph::Graph& g, const oracle::OracleResult& r) {
  REQUIRE(r.status == Status::exact);
  const std::vector<int> vc(r.witness.begin(), r.witness.begin() + static_cast<long>(g.n()));
  const std::vector<int> ec(r.witness.begin() + static_cast<long>(g.n()), r.witness.end());
  const auto t = chroma::TotalColorMatrix::from_parts(g.n(), {vc}, [&] {
    chroma::EdgeColoring e;
    for (std::size_t i = 0; i < g.edge_count(); ++i) e.colors[g.edges()[i]] = ec[i];
    return e;
  }());
  const auto rep = chroma::verify_total(g, t);
  CHECK(rep.proper);
  CHECK(static_cast<int>(rep.colors_used) == r.value);
  CHECK(naive::total_proper(static_cast<int>(g.n()), naive::edges_of(g), vc, ec));
}

}  // namespace

TEST_CASE("chromatic number examples") {
  const auto c5 = oracle::chromatic_number(graph::cycle(5));
  CHECK(c5.value == 3);
  check_vertex_witness(graph::cycle(5), c5);

  const auto g13 = graph::power_cycle(13, 5);
  const auto r13 = oracle::chromatic_number(g13);
  CHECK(r13.value == 7);
  check_vertex_witness(g13, r13);
  CHECK(r13.lower_bound == 7);
  CHECK(r13.upper_bound == 7);

  const auto a4 = graph::cayley_group(perm::enumerate(perm::GroupKind::alternating, 4), construct::alt_generators(4));
  const auto ra4 = oracle::chromatic_number(a4);
  CHECK(ra4.value == 3);
  check_vertex_witness(a4, ra4);
}

TEST_CASE("chromatic index examples") {
  CHECK(oracle::chromatic_index(graph::cycle(5)).value == 3);
  CHECK(oracle::chromatic_index(graph::complete(4)).value == 3);
  const auto t = gyro::default_table(8);
  const auto g = graph::cayley_gyro(t, {1, 7, 12});
  const auto r = oracle::chromatic_index(g);
  CHECK(r.value == 3);
  chroma::EdgeColoring e;
  for (std::size_t i = 0; i < g.edge_count(); ++i) e.colors[g.edges()[i]] = r.witness[i];
  CHECK(chroma::verify_edge(g, e).proper);
}

TEST_CASE("total chromatic number examples") {
  const auto k3 = graph::complete(3);
  const auto r3 = oracle::total_chromatic_number(k3);
  CHECK(r3.value == 3);
  check_total_witness(k3, r3);
  for (std::size_t n = 3; n <= 12; ++n) {
    const auto r = oracle::total_chromatic_number(graph::cycle(n));
    CHECK(r.value == (n % 3 == 0 ? 3 : 4));
    check_total_witness(graph::cycle(n), r);
  }
  const auto p = prism();
  const auto rp = oracle::total_chromatic_number(p);
  CHECK(rp.value == 4);
  check_total_witness(p, rp);
}

TEST_CASE("independence number examples") {
  const auto r = oracle::independence_number(graph::power_cycle(13, 3));
  CHECK(r.value == 3);
  CHECK(oracle::independence_number(graph::complete(6)).value == 1);
  CHECK(oracle::independence_number(graph::power_cycle(8, 2)).value == 2);
  const auto g = graph::power_cycle(13, 3);
  for (std::size_t i = 0; i < r.witness.size(); ++i)
    for (std::size_t j = i + 1; j < r.witness.size(); ++j)
      CHECK_FALSE(g.has_edge(static_cast<graph::Vertex>(r.witness[i]), static_cast<graph::Vertex>(r.witness[j])));
}

TEST_CASE("agrees with plain backtracking on random graphs") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 5 + rng() % 9;
    const auto g = random_graph(n, 0.2 + 0.05 * (trial % 10), rng);
    const auto e = naive::edges_of(g);
    const auto adj = naive::adjacency(static_cast<int>(n), e);
    const auto chi = oracle::chromatic_number(g);
    CHECK(chi.value == naive::chromatic(adj));
    check_vertex_witness(g, chi);
    CHECK(oracle::independence_number(g).value == naive::independence(static_cast<int>(n), e));
    if (g.edge_count() > 0 && g.edge_count() <= 12) {
      const auto chi1 = oracle::chromatic_index(g);
      CHECK(chi1.value == naive::chromatic(naive::line_graph(e)));
      const int delta = static_cast<int>(g.max_degree());
      CHECK((chi1.value == delta || chi1.value == delta + 1));
      const auto chi2 = oracle::total_chromatic_number(g);
      CHECK(chi2.value == naive::chromatic(naive::total_graph(static_cast<int>(n), e)));
      CHECK((chi2.value == delta + 1 || chi2.value == delta + 2));
      check_total_witness(g, chi2);
    }
  }
}

TEST_CASE("budgets stop the search without guessing") {
  oracle::Budget tiny;
  tiny.max_nodes = 5;
  const auto r = oracle::chromatic_number(graph::power_cycle(13, 5), tiny);
  CHECK(r.status == Status::budget_exceeded);
  CHECK(r.lower_bound <= r.upper_bound);

  oracle::Budget small;
  small.max_elements = 10;
  CHECK(oracle::total_chromatic_number(graph::cycle(9), small).status == Status::budget_exceeded);
}

TEST_CASE("pinned and forbidden search") {
  const auto c6 = graph::cycle(6);
  oracle::ColoringSearch s(c6, {});
  const auto two = s.solve(2, {2, 0, 0, 0, 0, 0});
  REQUIRE(two.has_value());
  CHECK((*two)[0] == 2);
  CHECK(chroma::verify_vertex(c6, {*two}).proper);
  // With vertex 0 at 1, vertex 1 must take 2, which is forbidden.
  CHECK_FALSE(s.solve(2, {1, 0, 0, 0, 0, 0}, {0, 0b10, 0, 0, 0, 0}).has_value());
  int offered = 0;
  const auto third = s.solve_accepting(3, [&](const std::vector<int>&) { return ++offered == 3; });
  REQUIRE(third.has_value());
  CHECK(offered == 3);
}

TEST_CASE("greedy coloring is proper") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    const auto g = random_graph(20, 0.3, rng);
    CHECK(chroma::verify_vertex(g, {oracle::dsatur_greedy(g)}).proper);
  }
}
