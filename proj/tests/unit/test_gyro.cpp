#include <doctest.h>

#include "cayley/error.hpp"
#include "cayley/gyro.hpp"

using namespace cayley::gyro;

namespace {

// The selected reading, written out directly on residues.
Label reference_add(std::size_t m, Label a, Label b) {
  const long long M = static_cast<long long>(m);
  const long long i = a % m, j = b % m;
  const bool t2a = a >= m, t2b = b >= m;
  long long r = 0;
  if (!t2a && !t2b) r = i + j;
  else if (!t2a) r = i + j;
  else if (!t2b) r = i + (M / 2 - 1) * j;
  else r = (M / 2 + 1) * i + (M / 2 - 1) * j;
  r %= M;
  if (t2a != t2b) r += M;
  return static_cast<Label>(r);
}

}  // namespace

TEST_CASE("power of two check") {
  CHECK(is_power_of_two(4));
  CHECK(is_power_of_two(32));
  CHECK_FALSE(is_power_of_two(12));
  CHECK_FALSE(is_power_of_two(0));
  CHECK_THROWS_AS(default_table(12), cayley::UsageError);
  CHECK_THROWS_AS(default_table(2), cayley::UsageError);
}

TEST_CASE("candidate list covers every reading") {
  // 24 formula orders, 2 coefficient orders, 16 lift masks.
  CHECK(candidate_variants().size() == 24 * 2 * 16);
}

TEST_CASE("default table on small examples") {
  const auto t = default_table(8);
  CHECK(t.order() == 16);
  CHECK(t.add(5, 6) == 3);
  CHECK(t.add(12, 12) == 0);
  CHECK(t.half_reflection() == 12);
  for (Label a = 0; a < 16; ++a) CHECK(t.add(0, a) == a);
  CHECK(t.inverse(0) == 0);
  CHECK(t.inverse(3) == 5);
  for (Label r = 0; r < 8; ++r) CHECK(t.inverse(r + 8) == r + 8);
}

TEST_CASE("selected table matches the closed form") {
  for (std::size_t m : {4u, 8u, 16u, 32u}) {
    const auto t = default_table(m);
    for (Label a = 0; a < t.order(); ++a)
      for (Label b = 0; b < t.order(); ++b) REQUIRE(t.add(a, b) == reference_add(m, a, b));
  }
}

TEST_CASE("same variant at every size, passing every axiom") {
  const auto v4 = select_variant(4);
  for (std::size_t m : {8u, 16u, 32u}) CHECK(select_variant(m) == v4);
  for (std::size_t m : {4u, 8u, 16u, 32u}) {
    const auto t = default_table(m);
    const auto report = verify_axioms(t);
    CHECK(report.all_passed());
    CHECK(report.checks.size() == 5);
    CHECK(satisfies_structure(t));
  }
}

TEST_CASE("T1 is the cyclic group and T2 elements are involutions") {
  for (std::size_t m : {4u, 8u, 16u}) {
    const auto t = default_table(m);
    for (Label i = 0; i < m; ++i) {
      for (Label j = 0; j < m; ++j) CHECK(t.add(i, j) == (i + j) % m);
      CHECK(t.add(static_cast<Label>(i + m), static_cast<Label>(i + m)) == 0);
    }
  }
}

TEST_CASE("gyrations fix their trivial cases") {
  const auto t = default_table(8);
  for (Label a = 0; a < 16; ++a)
    for (Label c = 0; c < 16; ++c) {
      CHECK(t.gyr(a, a, c) == c);
      CHECK(t.gyr(0, a, c) == c);
    }
}

TEST_CASE("a degenerate reading fails and the report says where") {
  // Every class uses i + j, lifted exactly when the right argument is in T2.
  Variant flat;
  flat.formula = {0, 1, 0, 1};
  flat.lift = {false, true, false, true};
  const GyroTable t(8, flat);
  const auto report = verify_axioms(t);
  CHECK_FALSE(report.all_passed());
  bool some_failure_named = false;
  for (const auto& c : report.checks) {
    if (!c.passed) {
      some_failure_named = true;
      CHECK_FALSE(c.counterexample.empty());
    }
  }
  CHECK(some_failure_named);
  CHECK(report.find("left identity") != nullptr);
}

TEST_CASE("literal reading is enumerated") {
  const auto lit = literal_variant();
  bool found = false;
  for (const auto& v : candidate_variants()) found = found || v == lit;
  CHECK(found);
}
