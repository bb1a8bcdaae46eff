// Acceptance run: one PASS/FAIL line per criterion, then a summary line.
// Exit status is the number of failed criteria.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cayley/construct.hpp"
#include "cayley/oracle.hpp"

using namespace cayley;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      if (!detail.empty()) detail += "; ";
      detail += "failed: " + what;
    }
  }
  void note(const std::string& s) {
    if (ok) detail += (detail.empty() ? "" : "; ") + s;
  }
};

// Oracle runs collected across criteria for the self-consistency check.
struct OracleRun {
  std::string label;
  enum class Kind { chi, chi_prime, chi_double_prime } kind;
  graph::Graph g;
  oracle::OracleResult r;
};
std::vector<OracleRun> g_runs;

oracle::OracleResult run(const std::string& label, OracleRun::Kind kind, const graph::Graph& g) {
  oracle::OracleResult r;
  switch (kind) {
    case OracleRun::Kind::chi: r = oracle::chromatic_number(g); break;
    case OracleRun::Kind::chi_prime: r = oracle::chromatic_index(g); break;
    case OracleRun::Kind::chi_double_prime: r = oracle::total_chromatic_number(g); break;
  }
  g_runs.push_back({label, kind, g, r});
  return r;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

graph::Graph alt_graph(std::size_t n) {
  return graph::cayley_group(perm::enumerate(perm::GroupKind::alternating, n), construct::alt_generators(n));
}

// ---------------------------------------------------------------------------

Outcome golden_tables() {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  const auto a = chroma::matrix_to_string(construct::total_color_power_cycle(13, 5).matrix);
  const auto b = chroma::matrix_to_string(construct::total_color_power_cycle(25, 5).matrix);
  const std::chrono::duration<double> dt = std::chrono::steady_clock::now() - t0;
  o.require(a == slurp(CAYLEY_GOLDEN_DIR "/table1.csv"), "C_13^5 matrix equals table1.csv");
  o.require(b == slurp(CAYLEY_GOLDEN_DIR "/table2.csv"), "C_25^5 matrix equals table2.csv");
  o.require(dt.count() < 1.0, "runtime under 1 s");
  o.note("both tables byte-identical");
  return o;
}

Outcome power_cycle_sweep() {
  Outcome o;
  int count = 0;
  for (std::size_t k : {3u, 5u, 7u}) {
    for (std::size_t m : {2u, 4u, 6u}) {
      const std::size_t n = m * (k + 1) + 1;
      if (n > 57) continue;
      const auto r = construct::total_color_power_cycle(n, k);
      const auto tag = "n=" + std::to_string(n) + " k=" + std::to_string(k);
      o.require(r.report.proper, tag + " proper");
      o.require(r.report.colors_used == 2 * k + 2, tag + " uses 2k+2 colors");
      o.require(r.report.colors_used == r.report.max_degree + 2, tag + " uses max degree + 2");
      ++count;
    }
  }
  o.note(std::to_string(count) + " instances, each with exactly 2k+2 colors");
  return o;
}

Outcome sym_total() {
  Outcome o;
  for (std::size_t n : {3u, 6u}) {
    const auto r = construct::total_color_sym(n);
    const auto tag = "S" + std::to_string(n);
    o.require(r.report.proper, tag + " proper");
    o.require(r.report.max_degree == 3, tag + " max degree 3");
    o.require(r.report.colors_used == 4, tag + " 4 colors");
    o.require(r.report.bound_class == chroma::BoundClass::type_i, tag + " type I");
  }
  const auto prism = construct::total_color_sym(3).graph;
  const auto x = run("prism chi''", OracleRun::Kind::chi_double_prime, prism);
  o.require(x.status == oracle::Status::exact && x.value == 4, "oracle total chromatic number of the prism is 4");
  o.note("S3 and S6 4-total-colored; oracle total chromatic number 4 on S3");
  return o;
}

Outcome alt_groups() {
  Outcome o;
  const auto base = construct::alt_three_coloring(4);
  o.require(base.method == construct::LiftMethod::base_search && base.report.proper &&
                base.report.colors_used == 3,
            "exhaustive 3-coloring of the A4 graph");
  std::string methods;
  for (std::size_t n : {5u, 6u}) {
    const auto r = construct::alt_three_coloring(n);
    const auto tag = "A" + std::to_string(n);
    o.require(r.report.proper && r.report.colors_used == 3, tag + " lift proper with 3 colors");
    o.require(chroma::verify_vertex(alt_graph(n), r.coloring).proper, tag + " rechecked on a fresh graph");
    methods += (methods.empty() ? "" : ", ") + tag + " by " + std::string(construct::to_string(r.method));
  }
  for (std::size_t n : {4u, 5u}) {
    const auto r = construct::total_color_alt(n);
    const auto tag = "A" + std::to_string(n) + " total";
    o.require(r.report.proper, tag + " proper");
    o.require(r.report.colors_used == 5 && r.report.max_degree == 4, tag + " 5 = max degree + 1 colors");
  }
  const auto g4 = alt_graph(4);
  const auto chi = run("A4 chi", OracleRun::Kind::chi, g4);
  const auto tot = run("A4 chi''", OracleRun::Kind::chi_double_prime, g4);
  o.require(chi.status == oracle::Status::exact && chi.value == 3, "oracle chi(A4 graph) = 3");
  o.require(tot.status == oracle::Status::exact && tot.value == 5, "oracle chi''(A4 graph) = 5");
  o.note(methods + "; A4 and A5 5-total-colored; oracle chi=3, chi''=5 at n=4");
  return o;
}

Outcome conformable() {
  Outcome o;
  int count = 0;
  const auto check = [&](std::size_t n, std::size_t k) {
    const auto r = construct::conformable_partition(n, k);
    const auto c = chroma::verify_conformable(graph::power_cycle(n, k), r.coloring);
    o.require(c.conformable, "C_" + std::to_string(n) + "^" + std::to_string(k) + " conformable");
    ++count;
  };
  for (std::size_t n = 4; n <= 30; n += 2)
    for (std::size_t k = 1; k <= 5 && 2 * k < n; ++k) check(n, k);
  for (std::size_t n = 5; n <= 31; n += 2)
    for (std::size_t k = 1; 3 * (k + 1) < n; ++k) check(n, k);
  o.note(std::to_string(count) + " instances conformable");
  return o;
}

Outcome gyro_axioms() {
  Outcome o;
  const auto v = gyro::select_variant(4);
  for (std::size_t m : {4u, 8u, 16u, 32u}) {
    const auto tag = "m=" + std::to_string(m);
    o.require(gyro::select_variant(m) == v, tag + " selects the same variant");
    const gyro::GyroTable t(m, v);
    o.require(gyro::verify_axioms(t).all_passed(), tag + " axioms pass");
    for (gyro::Label r = 0; r < m; ++r) {
      const auto s = static_cast<gyro::Label>(r + m);
      if (t.add(s, s) != 0) {
        o.require(false, tag + " element " + std::to_string(s) + " involutive");
        break;
      }
    }
  }
  o.note("variant " + v.describe() + " passes at m=4,8,16,32; all T2 involutive");
  return o;
}

Outcome gyro_structure() {
  Outcome o;
  const auto t = gyro::default_table(8);
  const auto g = graph::cayley_gyro(t, construct::gyro_generators(t, {1, -1, 2, -2}));
  o.require(graph::is_regular(g, 5), "5-regular");
  const auto c82 = graph::power_cycle(8, 2);
  std::vector<graph::Vertex> t1(8), t2(8);
  std::iota(t1.begin(), t1.end(), 0);
  std::iota(t2.begin(), t2.end(), 8);
  std::vector<graph::Vertex> id(8);
  std::iota(id.begin(), id.end(), 0);
  o.require(graph::is_isomorphism(graph::induced(g, t1), c82, id), "T1 induces C_8^2");
  o.require(graph::is_isomorphism(graph::induced(g, t2), c82, id), "T2 induces C_8^2");
  std::vector<graph::Edge> matching;
  for (graph::Vertex x = 0; x < 16; ++x) {
    const auto y = t.add(t.half_reflection(), x);
    if (y > x) matching.emplace_back(x, y);
  }
  o.require(graph::is_perfect_matching(g, matching), "reflection edges form a perfect matching");
  o.note("5-regular, both halves C_8^2 under the identity map, 8-edge perfect matching");
  return o;
}

Outcome gyro_colorings() {
  Outcome o;
  const auto t = gyro::default_table(8);
  const std::vector<long long> s1{1, -1, 2, -2};
  const auto g = graph::cayley_gyro(t, construct::gyro_generators(t, s1));
  const auto chi_g = run("gyro m=8 chi", OracleRun::Kind::chi, g);
  const auto chi_c = run("C_8^2 chi", OracleRun::Kind::chi, graph::power_cycle(8, 2));
  o.require(chi_g.status == oracle::Status::exact && chi_c.status == oracle::Status::exact &&
                chi_g.value == chi_c.value,
            "oracle chi(G) = chi(C_8^2)");
  const auto v = construct::gyro_vertex_color(t, s1);
  o.require(v.report.proper && static_cast<int>(v.report.colors_used) == chi_c.value,
            "vertex construction uses chi(C_8^2) colors");

  const auto e = construct::gyro_edge_color(t, construct::gyro_generators(t, s1));
  const auto chi1 = run("gyro m=8 chi'", OracleRun::Kind::chi_prime, g);
  o.require(e.report.proper && e.class_i, "edge construction proper and class I");
  o.require(chi1.status == oracle::Status::exact && chi1.value == static_cast<int>(g.max_degree()),
            "oracle chi'(G) = max degree");

  const auto tot = construct::gyro_total_color(t, s1);
  o.require(tot.report.proper && tot.report.colors_used <= g.max_degree() + 2, "total construction within max degree + 2");
  const auto chi2 = run("gyro m=8 chi''", OracleRun::Kind::chi_double_prime, g);
  o.note("chi(G)=chi(C_8^2)=" + std::to_string(chi_c.value) + ", chi'=" + std::to_string(chi1.value) +
         ", total construction " + std::to_string(tot.report.colors_used) + " colors (oracle chi''=" +
         std::to_string(chi2.value) + ")");
  return o;
}

Outcome isomorphism() {
  Outcome o;
  std::mt19937 rng(20240617);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 5 + rng() % 46;
    std::vector<long long> units;
    for (long long a = 1; a < static_cast<long long>(n); ++a)
      if (std::gcd(a, static_cast<long long>(n)) == 1) units.push_back(a);
    const long long a = units[rng() % units.size()];
    std::vector<long long> s1;
    for (int i = 0, c = 1 + static_cast<int>(rng() % 3); i < c; ++i) {
      const long long x = 1 + static_cast<long long>(rng() % (n - 1));
      s1.push_back(x);
      s1.push_back(-x);
    }
    std::vector<long long> s2;
    for (auto x : s1) s2.push_back(a * x);
    const auto found = graph::iso_multiplier(n, s1, s2);
    const auto tag = "n=" + std::to_string(n) + " a=" + std::to_string(a);
    if (!found) {
      o.require(false, tag + " multiplier found");
      continue;
    }
    std::vector<graph::Vertex> phi(n);
    for (std::size_t v = 0; v < n; ++v)
      phi[v] = static_cast<graph::Vertex>((*found * static_cast<long long>(v)) % static_cast<long long>(n));
    o.require(graph::is_isomorphism(graph::circulant(n, s1), graph::circulant(n, s2), phi), tag + " map verified");
  }
  o.note("20 random instances, every witness map verified on edge sets");
  return o;
}

Outcome oracle_consistency() {
  Outcome o;
  // The two remaining published instances get an exact chi as well.
  run("C_13^5 chi", OracleRun::Kind::chi, graph::power_cycle(13, 5));
  run("C_5 chi'", OracleRun::Kind::chi_prime, graph::cycle(5));
  for (const auto& x : g_runs) {
    if (x.r.status != oracle::Status::exact) {
      o.require(false, x.label + " exact");
      continue;
    }
    const int delta = static_cast<int>(x.g.max_degree());
    switch (x.kind) {
      case OracleRun::Kind::chi: {
        const auto rep = chroma::verify_vertex(x.g, {x.r.witness});
        o.require(rep.proper && static_cast<int>(rep.colors_used) == x.r.value, x.label + " witness");
        break;
      }
      case OracleRun::Kind::chi_prime: {
        chroma::EdgeColoring e;
        for (std::size_t i = 0; i < x.g.edge_count(); ++i) e.colors[x.g.edges()[i]] = x.r.witness[i];
        const auto rep = chroma::verify_edge(x.g, e);
        o.require(rep.proper && static_cast<int>(rep.colors_used) == x.r.value, x.label + " witness");
        o.require(x.r.value == delta || x.r.value == delta + 1, x.label + " in {D, D+1}");
        break;
      }
      case OracleRun::Kind::chi_double_prime: {
        const auto n = x.g.n();
        std::vector<int> vc(x.r.witness.begin(), x.r.witness.begin() + static_cast<long>(n));
        chroma::EdgeColoring e;
        for (std::size_t i = 0; i < x.g.edge_count(); ++i) e.colors[x.g.edges()[i]] = x.r.witness[n + i];
        const auto rep = chroma::verify_total(x.g, chroma::TotalColorMatrix::from_parts(n, {vc}, e));
        o.require(rep.proper && static_cast<int>(rep.colors_used) == x.r.value, x.label + " witness");
        o.require(x.r.value == delta + 1 || x.r.value == delta + 2, x.label + " in {D+1, D+2}");
        break;
      }
    }
  }
  o.note(std::to_string(g_runs.size()) + " oracle results, all witnesses verified");
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    std::function<Outcome()> body;
  };
  const std::vector<Criterion> criteria{
      {1, "golden tables", golden_tables},
      {2, "power-of-cycle sweep", power_cycle_sweep},
      {3, "symmetric groups", sym_total},
      {4, "alternating groups", alt_groups},
      {5, "conformable partitions", conformable},
      {6, "gyrogroup axioms", gyro_axioms},
      {7, "gyrogroup graph structure", gyro_structure},
      {8, "gyrogroup colorings", gyro_colorings},
      {9, "multiplier isomorphisms", isomorphism},
      {10, "oracle self-consistency", oracle_consistency},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.body();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const std::chrono::duration<double> dt = std::chrono::steady_clock::now() - t0;
    std::printf("%s %2d %-26s %7.2fs  %s\n", o.ok ? "PASS" : "FAIL", c.id, c.name, dt.count(), o.detail.c_str());
    std::fflush(stdout);
    failed += o.ok ? 0 : 1;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed;
}
