#include "families.hpp"

#include <CLI11.hpp>

#include "cayley/construct.hpp"
#include "cayley/error.hpp"
#include "cayley/serialize.hpp"

namespace cayley::cli {

void add_family_flags(CLI::App& app, FamilyArgs& args, bool with_family) {
  if (with_family) {
    app.add_option("--family", args.family, "power-cycle, circulant, cycle, complete, sym, alt or gyro");
    app.add_option("--graph", args.graph_file, "graph JSON file (instead of --family)");
  }
  app.add_option("--n", args.n, "vertex count, or degree of Sn/An");
  app.add_option("--k", args.k, "power of the cycle; for gyro, S1 = +-1..+-k");
  app.add_option("--m", args.m, "gyrogroup half-order (power of two)");
  app.add_option("--connection", args.connection, "circulant connection set, e.g. 1,-1,5,-5")->delimiter(',');
  app.add_option("--s1", args.s1, "gyro T1 generators, e.g. 1,2,6,7")->delimiter(',');
  app.add_option("--gen", args.gens, "generator: cycle notation \"(1,2,3)\" for sym/alt, label for gyro");
}

std::vector<long long> gyro_s1(const FamilyArgs& args) {
  if (!args.s1.empty()) return args.s1;
  if (args.k == 0) throw UsageError("gyro needs --s1 or --k");
  std::vector<long long> out;
  for (std::size_t i = 1; i <= args.k; ++i) {
    out.push_back(static_cast<long long>(i));
    out.push_back(-static_cast<long long>(i));
  }
  return out;
}

std::vector<gyro::Label> gyro_gens(const FamilyArgs& args, const gyro::GyroTable& table) {
  if (args.gens.empty()) return construct::gyro_generators(table, gyro_s1(args));
  std::vector<gyro::Label> out;
  for (const auto& s : args.gens) {
    try {
      out.push_back(static_cast<gyro::Label>(std::stoul(s)));
    } catch (const std::exception&) {
      throw UsageError("gyro generator '" + s + "' is not a label");
    }
  }
  return out;
}

std::optional<std::vector<perm::Permutation>> perm_gens(const FamilyArgs& args, std::size_t n) {
  if (args.gens.empty()) return std::nullopt;
  std::vector<perm::Permutation> out;
  for (const auto& s : args.gens) out.push_back(perm::Permutation::parse(n, s));
  return out;
}

graph::Graph make_graph(const FamilyArgs& args) {
  if (!args.graph_file.empty()) return serialize::graph_from_json(serialize::read_json(args.graph_file));
  const auto& f = args.family;
  if (f.empty()) throw UsageError("give --family or --graph");
  if (f == "power-cycle") return graph::power_cycle(args.n, args.k);
  if (f == "circulant") return graph::circulant(args.n, args.connection);
  if (f == "cycle") return graph::cycle(args.n);
  if (f == "complete") return graph::complete(args.n);
  if (f == "sym" || f == "alt") {
    const auto kind = f == "sym" ? perm::GroupKind::symmetric : perm::GroupKind::alternating;
    const auto elements = perm::enumerate(kind, args.n);
    auto gens = perm_gens(args, args.n);
    if (!gens) gens = f == "sym" ? construct::sym_generators(args.n) : construct::alt_generators(args.n);
    return graph::cayley_group(elements, *gens);
  }
  if (f == "gyro") {
    const auto table = gyro::default_table(args.m);
    return graph::cayley_gyro(table, gyro_gens(args, table));
  }
  throw UsageError("unknown graph family '" + f + "'");
}

}  // namespace cayley::cli
