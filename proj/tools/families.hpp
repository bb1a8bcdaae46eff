#pragma once

// Graph families addressable from the command line, and the flags that pick
// one out.

#include <optional>
#include <string>
#include <vector>

#include "cayley/graph.hpp"
#include "cayley/gyro.hpp"
#include "cayley/perm.hpp"

namespace CLI {
class App;
}

namespace cayley::cli {

struct FamilyArgs {
  std::string family;   // power-cycle, circulant, cycle, complete, sym, alt, gyro
  std::string graph_file;
  std::size_t n = 0;
  std::size_t k = 0;
  std::size_t m = 0;
  std::vector<long long> connection;
  std::vector<long long> s1;
  std::vector<std::string> gens;  // cycle notation for sym/alt, labels for gyro
};

/// --n, --k, --m, --connection, --s1, --gen. `with_family` adds --family
/// and --graph as well (build takes the family positionally instead).
void add_family_flags(CLI::App& app, FamilyArgs& args, bool with_family);

/// Builds the graph named by the flags, or loads --graph. Throws UsageError
/// when the flags do not fit the family.
graph::Graph make_graph(const FamilyArgs& args);

/// S1 from --s1, or {+-1..+-k} from --k.
std::vector<long long> gyro_s1(const FamilyArgs& args);

/// --gen as gyro labels if given, else S1 plus the half reflection.
std::vector<gyro::Label> gyro_gens(const FamilyArgs& args, const gyro::GyroTable& table);

/// --gen parsed as cycle notation on n points, or nullopt if absent.
std::optional<std::vector<perm::Permutation>> perm_gens(const FamilyArgs& args, std::size_t n);

}  // namespace cayley::cli
