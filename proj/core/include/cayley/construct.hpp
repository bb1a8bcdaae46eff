#pragma once

/**
 * @file construct.hpp
 * @brief Constructive colorings of Cayley graphs.
 *
 * Every function here checks its own output with the chroma verifiers before
 * returning and throws VerificationFailure instead of handing back something
 * improper. Searches are deterministic: lexicographic order, no randomness.
 */

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "cayley/chroma.hpp"
#include "cayley/graph.hpp"
#include "cayley/gyro.hpp"
#include "cayley/oracle.hpp"
#include "cayley/perm.hpp"

namespace cayley::construct {

using chroma::ColoringReport;
using chroma::EdgeColoring;
using chroma::TotalColorMatrix;
using chroma::VertexColoring;
using graph::Graph;

struct TotalResult {
  Graph graph;
  TotalColorMatrix matrix;
  ColoringReport report;
  std::vector<std::string> notes;
};

struct VertexResult {
  Graph graph;
  VertexColoring coloring;
  ColoringReport report;
  std::vector<std::string> notes;
};

struct EdgeResult {
  Graph graph;
  EdgeColoring coloring;
  ColoringReport report;
  std::vector<std::string> notes;
};

// ---------------------------------------------------------------------------
// Powers of cycles

/// Order k+1 array cut from the commutative idempotent Latin square of odd
/// order k+2, L(i,j) = ((k+3)/2 * (i+j) mod (k+2)) + 1.
class PseudoLatin {
 public:
  /// k must be odd.
  explicit PseudoLatin(int k);
  int order() const noexcept { return k_ + 1; }
  int symbols() const noexcept { return k_ + 2; }
  /// Valid on the full square, 0 <= i, j <= k+1.
  int entry(int i, int j) const;

 private:
  int k_;
};

/// Total coloring of C_n^k with 2k+2 colors, for n = m(k+1)+1 with k odd >= 3
/// and m even >= 2. Vertices are cut into m blocks of k+1 (the last block
/// takes the extra vertex); each block is colored from the pseudo-Latin square
/// and the connecting diagonals get the colors k+3..2k+2.
TotalResult total_color_power_cycle(std::size_t n, std::size_t k);

/// Conformable coloring of C_n^k with exactly 2k+1 classes (empties allowed
/// for even n). Even n: k < n/2. Odd n: k+1 < n/3.
VertexResult conformable_partition(std::size_t n, std::size_t k);

// ---------------------------------------------------------------------------
// Symmetric and alternating groups

/// {(1,2), (1,2,...,n), (1,n,...,2)} on Sn.
std::vector<perm::Permutation> sym_generators(std::size_t n);

/// {(1,2,3), (1,3,2), t, t^-1} with t = (2,3,...,n) for even n and
/// t = (1,2,...,n) for odd n.
std::vector<perm::Permutation> alt_generators(std::size_t n);

/// The long generator t of alt_generators(n).
perm::Permutation alt_long_cycle(std::size_t n);

struct SymResult : TotalResult {
  /// Per left coset of <(1,2,...,n)>: 0..2 rotate the palette by that much,
  /// 3..5 are the three reflections {0,2,1}, {2,1,0}, {1,0,2}.
  std::vector<int> coset_palettes;
  bool rotations_only = false;  ///< no coset needed a reflected palette
};

/// Type I total coloring of C(Sn, sym_generators(n)) for 3 | n: the (1,2)
/// matching gets color 4, each n-cycle coset a 3-total-coloring with
/// vertex at position p colored pal[p mod 3] and edge p,p+1 pal[p+2 mod 3].
SymResult total_color_sym(std::size_t n, std::uint64_t search_budget = 10'000'000);

enum class LiftMethod { base_search, literal_plan, searched_plan, extension_search };
std::string_view to_string(LiftMethod m);

struct LiftOptions {
  std::uint64_t plan_budget = 1'000'000;  ///< offset sequences tried
  bool allow_extension = true;
  oracle::Budget extension_budget{};
  /// When set, a candidate lift is only returned if this accepts it.
  std::function<bool(const VertexColoring&)> accept;
};

struct LiftResult : VertexResult {
  LiftMethod method = LiftMethod::literal_plan;
  int colors = 0;                       ///< x
  std::vector<int> literal_plan;        ///< per-coset offsets from the shift rule
  std::optional<std::vector<int>> plan; ///< offsets actually used, if a plan worked
};

/// The per-coset offsets of the alternate shift rule: even n gives
/// 0,1,2,1,2,...,0 (principal coset first, remainder coset last); odd n gives
/// 0,1,2,0,1,2,0,... with the last coset at 1 when 3 | n.
std::vector<int> shift_plan(std::size_t n);

/// Extends a proper x-coloring of C(A_{n-1}, alt_generators(n-1)) to
/// C(An, alt_generators(n)) through the right cosets of the stabilizer of n.
/// Tries the shift rule, then every offset sequence with the principal coset
/// at 0, then (if allowed) an exact search that keeps the principal coset's
/// colors and completes the rest.
LiftResult lift_alt_coloring(std::size_t n, const VertexColoring& base, const LiftOptions& options = {});

/// A proper 3-coloring of C(An, S): exhaustive search at n = 4, lifted upward.
/// Each intermediate lift is required to lift once more, so a chain that
/// would dead-end is never chosen.
LiftResult alt_three_coloring(std::size_t n, const LiftOptions& options = {});

struct AltTotalResult : TotalResult {
  bool equitable = false;
  bool cross_classes_two_regular = false;  ///< every two-class induced graph 2-regular
  bool used_fallback = false;              ///< matchings found by list edge-coloring search
};

/// Total coloring of C(An, S) with 5 colors: vertices from an equitable
/// 3-coloring, color i also on a perfect matching of the other two classes,
/// colors 4 and 5 on the remaining 2-factor.
AltTotalResult total_color_alt(std::size_t n, std::uint64_t search_budget = 50'000'000);

// ---------------------------------------------------------------------------
// 2-gyrogroups

/// S1 plus the reflection m/2 + m.
std::vector<gyro::Label> gyro_generators(const gyro::GyroTable& t, const std::vector<long long>& s1);

struct GyroVertexResult : VertexResult {
  int circulant_chromatic = 0;             ///< colors used on T1
  bool circulant_exact = false;            ///< T1 coloring is oracle-optimal
  std::optional<int> graph_chromatic;      ///< oracle chi(G), when affordable
  bool permutation_found = false;          ///< a class permutation sufficed, no repair
};

/// Colors T1 like circulant(m, S1) and T2 with a permuted copy so that the
/// reflection matching is never monochromatic.
GyroVertexResult gyro_vertex_color(const gyro::GyroTable& t, const std::vector<long long>& s1,
                                   const oracle::Budget& budget = {});

struct GyroTotalResult : TotalResult {
  int circulant_total = 0;   ///< colors in the total coloring of circulant(m, S1)
  int matching_color = 0;
  bool within_tcc = false;   ///< colors <= max degree + 2
  bool type_i = false;       ///< colors == max degree + 1
};

GyroTotalResult gyro_total_color(const gyro::GyroTable& t, const std::vector<long long>& s1,
                                 const oracle::Budget& budget = {});

struct GyroEdgeResult : EdgeResult {
  std::vector<int> reflection_colors;  ///< one color per T2 generator, in order
  bool circulant_exact = false;        ///< T1 part colored by the oracle, not Misra-Gries
  bool class_i = false;
};

/// Edge coloring of C(Gamma, S) for any symmetric S: a fresh color per
/// reflection generator, and a shared palette for the two circulant halves.
GyroEdgeResult gyro_edge_color(const gyro::GyroTable& t, const std::vector<gyro::Label>& gens,
                               const oracle::Budget& budget = {});

// ---------------------------------------------------------------------------

/// Misra-Gries: a proper edge coloring with at most max degree + 1 colors.
EdgeColoring misra_gries(const Graph& g);

}  // namespace cayley::construct
