#include <doctest.h>

#include "cayley/error.hpp"
#include "cayley/serialize.hpp"

using namespace cayley;
namespace ser = cayley::serialize;

TEST_CASE("graph JSON round trip") {
  const auto g = graph::power_cycle(9, 2);
  const auto j = ser::to_json(g);
  CHECK(j["n"] == 9);
  CHECK(j["edges"].size() == 18);
  CHECK(ser::graph_from_json(j) == g);
  CHECK(ser::graph_from_json(ser::Json::parse(ser::dump(j))) == g);
}

TEST_CASE("coloring JSON round trip") {
  const chroma::VertexColoring v{{1, 2, 3, 1}};
  CHECK(ser::vertex_coloring_from_json(ser::to_json(v)).colors == v.colors);
  chroma::EdgeColoring e;
  e.colors[{0, 1}] = 2;
  e.colors[{1, 3}] = 1;
  const auto back = ser::edge_coloring_from_json(ser::to_json(e));
  CHECK(back.colors == e.colors);
}

TEST_CASE("reports serialize with stable keys") {
  const auto r = chroma::verify_vertex(graph::cycle(5), {{1, 2, 1, 2, 1}});
  const auto j = ser::to_json(r);
  CHECK(j["proper"] == false);
  CHECK(j["witness"][0]["vertex"] == 0);
  CHECK(j["witness"][1]["vertex"] == 4);
  CHECK(ser::dump(j).back() == '\n');
  CHECK(ser::dump(j) == ser::dump(ser::to_json(r)));
}

TEST_CASE("malformed JSON is a usage error") {
  CHECK_THROWS_AS(ser::graph_from_json(ser::Json::parse(R"({"n": 3})")), UsageError);
  CHECK_THROWS_AS(ser::graph_from_json(ser::Json::parse(R"({"n": 3, "edges": [[0]]})")), UsageError);
  CHECK_THROWS_AS(ser::graph_from_json(ser::Json::parse(R"({"n": 3, "edges": [[0, 0]]})")), UsageError);
  CHECK_THROWS_AS(ser::vertex_coloring_from_json(ser::Json::parse(R"({"colors": "x"})")), UsageError);
  CHECK_THROWS_AS(ser::edge_coloring_from_json(ser::Json::parse(R"({"edges": [[0, 1]]})")), UsageError);
  CHECK_THROWS_AS(ser::read_json("/nonexistent/file.json"), UsageError);
}
