// cayley: build Cayley graphs, color them by the constructions in
// cayley/construct.hpp, and check colorings with the verifiers and oracles.
//
// Exit codes: 0 ok, 1 usage, 2 verification failed, 3 budget exceeded.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>

#include "cayley/construct.hpp"
#include "cayley/error.hpp"
#include "cayley/serialize.hpp"
#include "families.hpp"

namespace {

using namespace cayley;
using serialize::Json;

constexpr int kOk = 0;
constexpr int kUsage = 1;
constexpr int kVerification = 2;
constexpr int kBudget = 3;

struct Common {
  std::string output;
  std::string manifest;
  bool timing = false;
};

// One manifest per invocation; written only when --manifest is given.
class Manifest {
 public:
  Manifest(std::string command, const Common& common)
      : command_(std::move(command)), common_(common), start_(std::chrono::steady_clock::now()) {}

  Json& parameters() { return parameters_; }

  void artifact(const std::string& path, const std::string& kind, bool verified) {
    Json a;
    a["path"] = path;
    a["kind"] = kind;
    a["verified"] = verified;
    artifacts_.push_back(std::move(a));
  }

  void write(bool verified) const {
    if (common_.manifest.empty()) return;
    Json j;
    j["tool"] = "cayley";
    j["version"] = CAYLEY_VERSION;
    j["command"] = command_;
    j["parameters"] = parameters_;
    j["artifacts"] = artifacts_.is_null() ? Json::array() : artifacts_;
    j["verified"] = verified;
    if (common_.timing) {
      const std::chrono::duration<double> dt = std::chrono::steady_clock::now() - start_;
      j["seconds"] = dt.count();
    }
    serialize::write_json(common_.manifest, j);
  }

 private:
  std::string command_;
  const Common& common_;
  std::chrono::steady_clock::time_point start_;
  Json parameters_ = Json::object();
  Json artifacts_ = Json::array();
};

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot write " + path);
  out << text;
}

std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

Json family_parameters(const cli::FamilyArgs& a) {
  Json p;
  if (!a.family.empty()) p["family"] = a.family;
  if (!a.graph_file.empty()) p["graph"] = a.graph_file;
  if (a.n) p["n"] = a.n;
  if (a.k) p["k"] = a.k;
  if (a.m) p["m"] = a.m;
  if (!a.connection.empty()) p["connection"] = a.connection;
  if (!a.s1.empty()) p["s1"] = a.s1;
  if (!a.gens.empty()) p["gens"] = a.gens;
  return p;
}

void add_common(CLI::App& app, Common& c, bool with_output) {
  if (with_output) app.add_option("-o,--output", c.output, "artifact file");
  app.add_option("--manifest", c.manifest, "write a run manifest JSON here");
  app.add_flag("--timing", c.timing, "record wall time in the manifest (breaks byte-stability)");
}

Json notes_json(const std::vector<std::string>& notes) { return notes; }

// ---------------------------------------------------------------------------
// build

int cmd_build(const cli::FamilyArgs& args, const Common& common) {
  Manifest manifest("build", common);
  manifest.parameters() = family_parameters(args);
  const auto g = cli::make_graph(args);
  std::size_t min_deg = g.n() ? g.degree(0) : 0;
  for (graph::Vertex v = 0; v < g.n(); ++v) min_deg = std::min(min_deg, g.degree(v));
  Json summary;
  summary["vertices"] = g.n();
  summary["edges"] = g.edge_count();
  summary["max_degree"] = g.max_degree();
  summary["regular"] = min_deg == g.max_degree();
  if (!common.output.empty()) {
    serialize::write_json(common.output, serialize::to_json(g));
    manifest.artifact(common.output, "graph", true);
  }
  std::cout << serialize::dump(summary);
  manifest.write(true);
  return kOk;
}

// ---------------------------------------------------------------------------
// color

// Descriptive aliases for the numbered method names.
std::string canonical_method(const std::string& m) {
  static const std::map<std::string, std::string> aliases{
      {"power-cycle-total", "thm5-total"}, {"sym-total", "thm1"},       {"alt-lift", "thm2-lift"},
      {"alt-total", "cor-alt-total"},      {"conformable", "thm4-conformable"},
  };
  const auto it = aliases.find(m);
  return it == aliases.end() ? m : it->second;
}

struct ColorArgs {
  std::string method;
  cli::FamilyArgs fam;
  bool no_extension = false;
};

int cmd_color(const ColorArgs& a, const Common& common) {
  Manifest manifest("color " + a.method, common);
  manifest.parameters() = family_parameters(a.fam);
  const auto budget = oracle::Budget::from_env();
  Json out;
  out["method"] = a.method;
  std::string artifact_kind;
  std::string artifact_text;
  bool proper = false;

  const auto total_artifact = [&](const chroma::TotalColorMatrix& t) {
    artifact_kind = "total-color-matrix";
    artifact_text = chroma::matrix_to_string(t);
  };
  const auto json_artifact = [&](const Json& j, const char* kind) {
    artifact_kind = kind;
    artifact_text = serialize::dump(j);
  };

  const auto m = canonical_method(a.method);
  if (m == "thm5-total") {
    auto r = construct::total_color_power_cycle(a.fam.n, a.fam.k);
    out["report"] = serialize::to_json(r.report);
    proper = r.report.proper;
    total_artifact(r.matrix);
  } else if (m == "thm1") {
    auto r = construct::total_color_sym(a.fam.n);
    out["report"] = serialize::to_json(r.report);
    out["coset_palettes"] = r.coset_palettes;
    out["rotations_only"] = r.rotations_only;
    out["notes"] = notes_json(r.notes);
    proper = r.report.proper;
    total_artifact(r.matrix);
  } else if (m == "thm2-lift") {
    construct::LiftOptions opts;
    opts.allow_extension = !a.no_extension;
    opts.extension_budget = budget;
    auto r = construct::alt_three_coloring(a.fam.n, opts);
    out["report"] = serialize::to_json(r.report);
    out["lift_method"] = std::string(construct::to_string(r.method));
    out["colors"] = r.colors;
    if (a.fam.n >= 5) out["literal_plan"] = r.literal_plan;
    out["plan"] = r.plan ? Json(*r.plan) : Json(nullptr);
    out["notes"] = notes_json(r.notes);
    proper = r.report.proper;
    json_artifact(serialize::to_json(r.coloring), "vertex-coloring");
  } else if (m == "cor-alt-total") {
    auto r = construct::total_color_alt(a.fam.n, budget.max_nodes);
    out["report"] = serialize::to_json(r.report);
    out["equitable"] = r.equitable;
    out["cross_classes_two_regular"] = r.cross_classes_two_regular;
    out["used_fallback"] = r.used_fallback;
    out["notes"] = notes_json(r.notes);
    proper = r.report.proper;
    total_artifact(r.matrix);
  } else if (m == "thm3-conformable" || m == "thm4-conformable") {
    auto r = construct::conformable_partition(a.fam.n, a.fam.k);
    const auto check = chroma::verify_conformable(r.graph, r.coloring);
    out["report"] = serialize::to_json(r.report);
    out["conformability"] = serialize::to_json(check);
    out["notes"] = notes_json(r.notes);
    proper = check.conformable;
    json_artifact(serialize::to_json(r.coloring), "vertex-coloring");
  } else if (m == "gyro-vertex") {
    const auto t = gyro::default_table(a.fam.m);
    auto r = construct::gyro_vertex_color(t, cli::gyro_s1(a.fam), budget);
    out["report"] = serialize::to_json(r.report);
    out["circulant_chromatic"] = r.circulant_chromatic;
    out["circulant_exact"] = r.circulant_exact;
    out["graph_chromatic"] = r.graph_chromatic ? Json(*r.graph_chromatic) : Json(nullptr);
    out["permutation_found"] = r.permutation_found;
    out["notes"] = notes_json(r.notes);
    proper = r.report.proper;
    json_artifact(serialize::to_json(r.coloring), "vertex-coloring");
  } else if (m == "gyro-total") {
    const auto t = gyro::default_table(a.fam.m);
    auto r = construct::gyro_total_color(t, cli::gyro_s1(a.fam), budget);
    out["report"] = serialize::to_json(r.report);
    out["circulant_total"] = r.circulant_total;
    out["matching_color"] = r.matching_color;
    out["within_tcc"] = r.within_tcc;
    out["type_i"] = r.type_i;
    out["notes"] = notes_json(r.notes);
    proper = r.report.proper;
    total_artifact(r.matrix);
  } else if (m == "gyro-edge") {
    const auto t = gyro::default_table(a.fam.m);
    auto r = construct::gyro_edge_color(t, cli::gyro_gens(a.fam, t), budget);
    out["report"] = serialize::to_json(r.report);
    out["reflection_colors"] = r.reflection_colors;
    out["circulant_exact"] = r.circulant_exact;
    out["class_i"] = r.class_i;
    out["notes"] = notes_json(r.notes);
    proper = r.report.proper;
    json_artifact(serialize::to_json(r.coloring), "edge-coloring");
  } else {
    throw UsageError("unknown coloring method '" + m + "'");
  }

  if (!common.output.empty()) {
    write_text(common.output, artifact_text);
    manifest.artifact(common.output, artifact_kind, proper);
  }
  std::cout << serialize::dump(out);
  manifest.write(proper);
  return proper ? kOk : kVerification;
}

// ---------------------------------------------------------------------------
// verify

int cmd_verify(const std::string& kind, const cli::FamilyArgs& fam, const std::string& artifact,
               const Common& common) {
  Manifest manifest("verify " + kind, common);
  manifest.parameters() = family_parameters(fam);
  manifest.parameters()["artifact"] = artifact;
  const auto g = cli::make_graph(fam);
  Json out;
  out["kind"] = kind;
  bool ok = false;
  if (kind == "total") {
    const auto t = chroma::read_matrix(artifact);
    const auto r = chroma::verify_total(g, t);
    out["report"] = serialize::to_json(r);
    ok = r.proper;
  } else if (kind == "vertex") {
    const auto r = chroma::verify_vertex(g, serialize::vertex_coloring_from_json(serialize::read_json(artifact)));
    out["report"] = serialize::to_json(r);
    ok = r.proper;
  } else if (kind == "edge") {
    const auto r = chroma::verify_edge(g, serialize::edge_coloring_from_json(serialize::read_json(artifact)));
    out["report"] = serialize::to_json(r);
    ok = r.proper;
  } else if (kind == "conformable") {
    const auto r = chroma::verify_conformable(g, serialize::vertex_coloring_from_json(serialize::read_json(artifact)));
    out["report"] = serialize::to_json(r);
    ok = r.conformable;
  } else {
    throw UsageError("unknown verification kind '" + kind + "'");
  }
  manifest.artifact(artifact, kind, ok);
  std::cout << serialize::dump(out);
  manifest.write(ok);
  return ok ? kOk : kVerification;
}

// ---------------------------------------------------------------------------
// oracle

int cmd_oracle(const std::string& param, const cli::FamilyArgs& fam, const Common& common) {
  Manifest manifest("oracle " + param, common);
  manifest.parameters() = family_parameters(fam);
  const auto g = cli::make_graph(fam);
  const auto budget = oracle::Budget::from_env();
  oracle::OracleResult r;
  Json out;
  out["parameter"] = param;
  out["vertices"] = g.n();
  out["max_degree"] = g.max_degree();
  const auto delta = static_cast<int>(g.max_degree());
  if (param == "chi") {
    r = oracle::chromatic_number(g, budget);
  } else if (param == "chi-prime") {
    r = oracle::chromatic_index(g, budget);
    out["class"] = r.value == delta ? "class I" : r.value == delta + 1 ? "class II" : "beyond Vizing";
  } else if (param == "chi-double-prime") {
    r = oracle::total_chromatic_number(g, budget);
    out["type"] = r.value == delta + 1 ? "type I" : r.value == delta + 2 ? "type II" : "beyond TCC";
  } else if (param == "alpha") {
    r = oracle::independence_number(g, budget);
  } else {
    throw UsageError("unknown oracle parameter '" + param + "'");
  }
  out["result"] = serialize::to_json(r);
  std::cout << serialize::dump(out);
  const bool exact = r.status == oracle::Status::exact;
  manifest.write(exact);
  return exact ? kOk : kBudget;
}

// ---------------------------------------------------------------------------
// iso, golden, gyro-table, axioms

int cmd_iso(std::size_t n, const std::vector<long long>& s1, const std::vector<long long>& s2) {
  Json out;
  out["n"] = n;
  out["s1"] = graph::normalize_residues(n, s1);
  out["s2"] = graph::normalize_residues(n, s2);
  const auto a = graph::iso_multiplier(n, s1, s2);
  out["multiplier"] = a ? Json(*a) : Json(nullptr);
  std::cout << serialize::dump(out);
  return kOk;
}

int cmd_golden(const std::string& dir) {
  struct Case {
    const char* file;
    std::size_t n, k;
  };
  bool all = true;
  Json out = Json::array();
  for (const Case& c : {Case{"table1.csv", 13, 5}, Case{"table2.csv", 25, 5}}) {
    const auto path = (std::filesystem::path(dir) / c.file).string();
    const auto derived = chroma::matrix_to_string(construct::total_color_power_cycle(c.n, c.k).matrix);
    const auto golden = read_text(path);
    Json j;
    j["file"] = path;
    j["n"] = c.n;
    j["k"] = c.k;
    j["identical"] = derived == golden;
    if (derived != golden) {
      std::istringstream a(derived), b(golden);
      std::string la, lb;
      for (int line = 1;; ++line) {
        const bool ga = static_cast<bool>(std::getline(a, la));
        const bool gb = static_cast<bool>(std::getline(b, lb));
        if (!ga && !gb) break;
        if (la != lb || ga != gb) {
          j["first_difference_line"] = line;
          break;
        }
      }
    }
    all = all && derived == golden;
    out.push_back(std::move(j));
  }
  std::cout << serialize::dump(out);
  return all ? kOk : kVerification;
}

int cmd_gyro_table(std::size_t m, const Common& common) {
  const auto t = gyro::default_table(m);
  std::ostringstream s;
  s << "# variant: " << t.variant().describe() << "\n";
  for (gyro::Label b = 0; b < t.order(); ++b) s << ',' << b;
  s << "\n";
  for (gyro::Label a = 0; a < t.order(); ++a) {
    s << a;
    for (gyro::Label b = 0; b < t.order(); ++b) s << ',' << t.add(a, b);
    s << "\n";
  }
  if (common.output.empty()) {
    std::cout << s.str();
  } else {
    write_text(common.output, s.str());
  }
  return kOk;
}

int cmd_axioms(std::size_t m) {
  const auto t = gyro::default_table(m);
  Json out;
  out["m"] = m;
  out["variant"] = t.variant().describe();
  out["axioms"] = serialize::to_json(gyro::verify_axioms(t));
  out["structure"] = gyro::satisfies_structure(t);
  std::cout << serialize::dump(out);
  return out["axioms"]["all_passed"].get<bool>() ? kOk : kVerification;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cayley graph colorings, verifiers and exact oracles"};
  app.set_version_flag("--version", std::string(CAYLEY_VERSION));
  app.require_subcommand(1);

  Common common;
  int rc = kOk;

  cli::FamilyArgs build_args;
  auto* build = app.add_subcommand("build", "build a graph and write it as JSON");
  build->add_option("family", build_args.family, "power-cycle, circulant, cycle, complete, sym, alt, gyro")
      ->required();
  cli::add_family_flags(*build, build_args, false);
  add_common(*build, common, true);
  build->callback([&] { rc = cmd_build(build_args, common); });

  ColorArgs color_args;
  auto* color = app.add_subcommand("color", "run a construction and verify its output");
  color->add_option("method", color_args.method,
                    "thm1 (sym-total), thm2-lift (alt-lift), cor-alt-total (alt-total), "
                    "thm3-conformable / thm4-conformable (conformable), thm5-total (power-cycle-total), "
                    "gyro-vertex, gyro-total, gyro-edge")
      ->required();
  cli::add_family_flags(*color, color_args.fam, false);
  color->add_flag("--no-extension", color_args.no_extension, "alt-lift: offset plans only, no exact extension");
  add_common(*color, common, true);
  color->callback([&] { rc = cmd_color(color_args, common); });

  std::string verify_kind, verify_artifact;
  cli::FamilyArgs verify_args;
  auto* verify = app.add_subcommand("verify", "check a coloring file against a graph");
  verify->add_option("kind", verify_kind, "vertex, edge, total, conformable")->required();
  verify->add_option("artifact", verify_artifact, "coloring JSON or matrix CSV")->required();
  cli::add_family_flags(*verify, verify_args, true);
  add_common(*verify, common, false);
  verify->callback([&] { rc = cmd_verify(verify_kind, verify_args, verify_artifact, common); });

  std::string oracle_param;
  cli::FamilyArgs oracle_args;
  auto* orc = app.add_subcommand("oracle", "exact chromatic parameters by exhaustive search");
  orc->add_option("parameter", oracle_param, "chi, chi-prime, chi-double-prime, alpha")->required();
  cli::add_family_flags(*orc, oracle_args, true);
  add_common(*orc, common, false);
  orc->callback([&] { rc = cmd_oracle(oracle_param, oracle_args, common); });

  std::size_t iso_n = 0;
  std::vector<long long> iso_s1, iso_s2;
  auto* iso = app.add_subcommand("iso", "multiplier isomorphism between two circulants");
  iso->add_option("--n", iso_n)->required();
  iso->add_option("--s1", iso_s1)->delimiter(',')->required();
  iso->add_option("--s2", iso_s2)->delimiter(',')->required();
  iso->callback([&] { rc = cmd_iso(iso_n, iso_s1, iso_s2); });

  std::string golden_dir = "tests/golden";
  auto* golden = app.add_subcommand("golden", "re-derive the two power-of-cycle tables and diff them");
  golden->add_option("--dir", golden_dir, "directory holding table1.csv and table2.csv");
  golden->callback([&] { rc = cmd_golden(golden_dir); });

  std::size_t table_m = 0;
  auto* gtable = app.add_subcommand("gyro-table", "dump the gyrogroup operation table as CSV");
  gtable->add_option("--m", table_m)->required();
  add_common(*gtable, common, true);
  gtable->callback([&] { rc = cmd_gyro_table(table_m, common); });

  std::size_t axioms_m = 0;
  auto* axioms = app.add_subcommand("axioms", "check the gyrogroup axioms exhaustively");
  axioms->add_option("--m", axioms_m)->required();
  axioms->callback([&] { rc = cmd_axioms(axioms_m); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const VerificationFailure& e) {
    std::cerr << "verification failed: " << e.what() << "\n";
    return kVerification;
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return kBudget;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return rc;
}
