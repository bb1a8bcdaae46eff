#include <doctest.h>

#include "cayley/construct.hpp"
#include "cayley/error.hpp"
#include "cayley/oracle.hpp"
#include "naive.hpp"

using namespace cayley;
using namespace cayley::construct;

namespace {

graph::Graph gyro_graph(std::size_t m, const std::vector<long long>& s1) {
  const auto t = gyro::default_table(m);
  return graph::cayley_gyro(t, gyro_generators(t, s1));
}

}  // namespace

TEST_CASE("vertex colorings reach the circulant's chromatic number") {
  struct Case {
    std::size_t m;
    std::vector<long long> s1;
    int chi;
  };
  for (const auto& c : {Case{8, {1, -1, 2, -2}, 4}, Case{8, {1, -1}, 2}, Case{16, {1, -1, 2, -2, 3, -3}, 4}}) {
    CAPTURE(c.m);
    const auto t = gyro::default_table(c.m);
    const auto r = gyro_vertex_color(t, c.s1);
    CHECK(r.report.proper);
    CHECK(r.circulant_chromatic == c.chi);
    CHECK(r.circulant_exact);
    CHECK(static_cast<int>(r.report.colors_used) == c.chi);
    CHECK(oracle::chromatic_number(graph::circulant(c.m, c.s1)).value == c.chi);
    REQUIRE(r.graph_chromatic.has_value());
    CHECK(*r.graph_chromatic == c.chi);
  }
}

TEST_CASE("vertex coloring at m=8, k=2 agrees with plain backtracking") {
  const auto g = gyro_graph(8, {1, -1, 2, -2});
  const auto adj = naive::adjacency(16, naive::edges_of(g));
  CHECK(naive::chromatic(adj) == naive::chromatic(naive::adjacency(8, naive::edges_of(graph::power_cycle(8, 2)))));
}

TEST_CASE("total colorings meet the conjectured bound") {
  for (std::size_t m : {4u, 8u}) {
    const std::vector<long long> s1 = m == 4 ? std::vector<long long>{1, -1} : std::vector<long long>{1, -1, 2, -2};
    CAPTURE(m);
    const auto t = gyro::default_table(m);
    const auto r = gyro_total_color(t, s1);
    const auto delta = r.graph.max_degree();
    CHECK(delta == s1.size() + 1);
    CHECK(r.report.proper);
    CHECK(r.report.colors_used <= delta + 2);
    CHECK(r.within_tcc);
    // Every reflection edge carries the one matching color.
    for (const auto& e : r.graph.edges()) {
      const bool reflection = t.add(t.half_reflection(), e.u) == e.v;
      if (reflection) CHECK(*r.matrix.at(e.u, e.v) == r.matching_color);
      else CHECK(*r.matrix.at(e.u, e.v) != r.matching_color);
    }
  }
  const auto g = gyro_graph(8, {1, -1, 2, -2});
  const auto exact = oracle::total_chromatic_number(g);
  REQUIRE(exact.status == oracle::Status::exact);
  CHECK(exact.value <= static_cast<int>(g.max_degree()) + 2);
}

TEST_CASE("edge colorings") {
  const auto t = gyro::default_table(8);

  const auto r3 = gyro_edge_color(t, {1, 7, 12});
  CHECK(r3.report.proper);
  CHECK(r3.class_i);
  CHECK(r3.report.colors_used == 3);
  CHECK(oracle::chromatic_index(r3.graph).value == 3);

  const auto r1 = gyro_edge_color(t, {12});
  CHECK(r1.report.proper);
  CHECK(r1.report.colors_used == 1);
  CHECK(r1.reflection_colors.size() == 1);

  const auto r5 = gyro_edge_color(t, {1, 2, 6, 7, 12});
  CHECK(r5.report.proper);
  CHECK(r5.class_i);
  CHECK(oracle::chromatic_index(r5.graph).value == 5);
  CHECK(r5.report.colors_used == 5);
}

TEST_CASE("bad connection sets") {
  const auto t = gyro::default_table(8);
  CHECK_THROWS_AS(gyro_vertex_color(t, {1, 2}), UsageError);
  CHECK_THROWS_AS(gyro_vertex_color(t, {0}), UsageError);
  CHECK_THROWS_AS(gyro_edge_color(t, {1, 12}), UsageError);
}
