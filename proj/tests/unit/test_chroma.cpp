#include <doctest.h>

#include <sstream>

#include "cayley/chroma.hpp"
#include "cayley/error.hpp"

using namespace cayley;
using namespace cayley::chroma;

TEST_CASE("vertex colorings") {
  const auto c5 = graph::cycle(5);
  const auto ok = verify_vertex(c5, {{1, 2, 1, 2, 3}});
  CHECK(ok.proper);
  CHECK(ok.colors_used == 3);
  CHECK_FALSE(ok.witness.has_value());

  const auto bad = verify_vertex(c5, {{1, 2, 1, 2, 1}});
  CHECK_FALSE(bad.proper);
  REQUIRE(bad.witness.has_value());
  CHECK(bad.witness->first == ElementRef::vertex(0));
  CHECK(bad.witness->second == ElementRef::vertex(4));

  const auto k6 = graph::induced(graph::power_cycle(13, 5), {0, 1, 2, 3, 4, 5});
  CHECK(verify_vertex(k6, {{1, 2, 3, 4, 5, 6}}).proper);
  CHECK_FALSE(verify_vertex(k6, {{1, 2, 3, 4, 5, 1}}).proper);

  // Colors need not be contiguous.
  CHECK(verify_vertex(c5, {{10, 20, 10, 20, 7}}).colors_used == 3);
  CHECK_THROWS_AS(verify_vertex(c5, {{1, 2, 1}}), UsageError);
  CHECK_THROWS_AS(verify_vertex(c5, {{1, 2, 1, 2, 0}}), UsageError);
}

TEST_CASE("edge colorings") {
  const graph::Graph matching(6, {{0, 1}, {2, 3}, {4, 5}});
  EdgeColoring m;
  for (const auto& e : matching.edges()) m.colors[e] = 1;
  const auto r = verify_edge(matching, m);
  CHECK(r.proper);
  CHECK(r.bound_class == BoundClass::class_i);

  const auto k4 = graph::complete(4);
  EdgeColoring f;
  f.colors[{0, 1}] = 1;
  f.colors[{2, 3}] = 1;
  f.colors[{0, 2}] = 2;
  f.colors[{1, 3}] = 2;
  f.colors[{0, 3}] = 3;
  f.colors[{1, 2}] = 3;
  const auto rk = verify_edge(k4, f);
  CHECK(rk.proper);
  CHECK(rk.bound_class == BoundClass::class_i);

  const graph::Graph star(4, {{0, 1}, {0, 2}, {0, 3}});
  EdgeColoring s;
  s.colors[{0, 1}] = 1;
  s.colors[{0, 2}] = 1;
  s.colors[{0, 3}] = 2;
  const auto rs = verify_edge(star, s);
  CHECK_FALSE(rs.proper);
  REQUIRE(rs.witness.has_value());
  CHECK(rs.witness->first.kind == ElementRef::Kind::edge);

  EdgeColoring extra = s;
  extra.colors[{1, 2}] = 3;
  CHECK_THROWS_AS(verify_edge(star, extra), UsageError);
}

TEST_CASE("total colorings") {
  const auto k3 = graph::complete(3);
  TotalColorMatrix t(3);
  t.set(0, 0, 1);
  t.set(1, 1, 2);
  t.set(2, 2, 3);
  t.set(0, 1, 3);
  t.set(1, 2, 1);
  t.set(0, 2, 2);
  const auto r = verify_total(k3, t);
  CHECK(r.proper);
  CHECK(r.colors_used == 3);
  CHECK(r.bound_class == BoundClass::type_i);

  // Edge color equal to an endpoint color.
  auto bad = t;
  bad.set(0, 1, 1);
  const auto rb = verify_total(k3, bad);
  CHECK_FALSE(rb.proper);
  CHECK(rb.witness.has_value());

  // Off-diagonal cells must match the edge set.
  TotalColorMatrix missing(3);
  missing.set(0, 0, 1);
  missing.set(1, 1, 2);
  missing.set(2, 2, 3);
  missing.set(0, 1, 3);
  CHECK_THROWS_AS(verify_total(k3, missing), UsageError);
}

TEST_CASE("conformable colorings") {
  const auto c82 = graph::power_cycle(8, 2);
  // Antipodal pairs, fifth class empty.
  const auto r = verify_conformable(c82, {{1, 2, 3, 4, 1, 2, 3, 4}});
  CHECK(r.conformable);
  CHECK(r.required_classes == 5);
  CHECK(r.class_sizes == std::vector<std::size_t>{2, 2, 2, 2, 0});

  CHECK(verify_conformable(graph::complete(5), {{1, 2, 3, 4, 5}}).conformable);

  // C_7^2 has independence number 2, so the only odd split 3,1,1,1,1 cannot
  // be proper: every 3-vertex class has an edge.
  const auto c72 = graph::power_cycle(7, 2);
  for (int a = 0; a < 7; ++a)
    for (int b = a + 1; b < 7; ++b)
      for (int c = b + 1; c < 7; ++c) {
        std::vector<int> colors(7, 0);
        colors[a] = colors[b] = colors[c] = 1;
        int next = 2;
        for (auto& x : colors)
          if (x == 0) x = next++;
        CHECK_FALSE(verify_conformable(c72, {colors}).conformable);
      }
  const auto mixed = verify_conformable(c72, {{1, 2, 3, 1, 2, 4, 5}});
  CHECK(mixed.coloring.proper);
  CHECK_FALSE(mixed.conformable);
  CHECK_FALSE(mixed.reason.empty());

  CHECK_THROWS_AS(verify_conformable(graph::Graph(3, {{0, 1}}), {{1, 2, 1}}), UsageError);
}

TEST_CASE("matrix CSV round trip and errors") {
  TotalColorMatrix t(3);
  t.set(0, 0, 1);
  t.set(1, 1, 2);
  t.set(2, 2, 1);
  t.set(0, 1, 3);
  t.set(1, 2, 3);
  const auto text = matrix_to_string(t);
  CHECK(text == ",0,1,2\n0,1,3,\n1,3,2,3\n2,,3,1\n");
  std::istringstream in(text);
  CHECK(parse_matrix(in) == t);

  std::istringstream asym(",0,1\n0,1,2\n1,3,1\n");
  CHECK_THROWS_WITH_AS(parse_matrix(asym), doctest::Contains("(0,1)"), UsageError);
  std::istringstream ragged(",0,1\n0,1\n1,2,1\n");
  CHECK_THROWS_AS(parse_matrix(ragged), UsageError);
  std::istringstream junk(",0,1\n0,1,x\n1,x,1\n");
  CHECK_THROWS_AS(parse_matrix(junk), UsageError);
}
