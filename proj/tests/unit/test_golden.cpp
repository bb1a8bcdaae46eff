#include <doctest.h>

#include <fstream>
#include <sstream>

#include "cayley/construct.hpp"

using namespace cayley;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

TEST_CASE("fixtures hold the published matrices") {
  const auto t1 = chroma::read_matrix(CAYLEY_GOLDEN_DIR "/table1.csv");
  CHECK(t1.n() == 13);
  CHECK(t1.at(0, 1) == 5);
  CHECK(t1.at(0, 0) == 1);
  CHECK(t1.at(6, 12) == std::nullopt);
  const auto r1 = chroma::verify_total(graph::power_cycle(13, 5), t1);
  CHECK(r1.proper);
  CHECK(r1.colors_used == 12);
  CHECK(r1.bound_class == chroma::BoundClass::type_ii);

  const auto t2 = chroma::read_matrix(CAYLEY_GOLDEN_DIR "/table2.csv");
  CHECK(t2.n() == 25);
  const auto r2 = chroma::verify_total(graph::power_cycle(25, 5), t2);
  CHECK(r2.proper);
  CHECK(r2.colors_used == 12);
}

TEST_CASE("construction reproduces the fixtures byte for byte") {
  CHECK(chroma::matrix_to_string(construct::total_color_power_cycle(13, 5).matrix) ==
        slurp(CAYLEY_GOLDEN_DIR "/table1.csv"));
  CHECK(chroma::matrix_to_string(construct::total_color_power_cycle(25, 5).matrix) ==
        slurp(CAYLEY_GOLDEN_DIR "/table2.csv"));
}
