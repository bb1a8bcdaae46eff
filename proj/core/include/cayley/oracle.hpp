#pragma once

// Exact chromatic parameters for small graphs by exhaustive search. These are
// the ground truth the constructions are checked against, so nothing here
// calls into the construction code.

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <string_view>
#include <vector>

#include "cayley/graph.hpp"

namespace cayley::oracle {

using graph::Graph;

struct Budget {
  std::uint64_t max_nodes = 200'000'000;
  double max_seconds = 120.0;
  /// Largest search graph (vertices of the line/total graph included).
  std::size_t max_elements = 2500;

  /// Defaults overridden by CAYLEY_ORACLE_NODES, CAYLEY_ORACLE_SECONDS and
  /// CAYLEY_ORACLE_ELEMENTS when set.
  static Budget from_env();
};

enum class Status { exact, budget_exceeded };
std::string_view to_string(Status s);

struct OracleResult {
  int value = 0;
  /// Colorings: one color (1-based) per search element. Independence
  /// number: the vertices of a maximum independent set.
  std::vector<int> witness;
  std::uint64_t nodes_explored = 0;
  /// Nodes spent proving value-1 infeasible (or value+1, for alpha).
  std::uint64_t certification_nodes = 0;
  Status status = Status::exact;
  int lower_bound = 0;
  int upper_bound = 0;
};

/// Decides k-colorability by DSATUR-ordered backtracking.
///
/// `fixed[v]` > 0 pins vertex v to that color (1-based); `forbidden[v]` is a
/// bitmask of colors (bit c-1) v may not take. Both may be empty. Returns the
/// coloring (1-based) or nullopt once the search space is exhausted. Throws
/// BudgetExceeded if the budget runs out first.
class ColoringSearch {
 public:
  ColoringSearch(const Graph& g, Budget budget);

  std::optional<std::vector<int>> solve(int k, const std::vector<int>& fixed = {},
                                        const std::vector<std::uint64_t>& forbidden = {});

  /// Like solve, but complete colorings are offered to `accept` in search
  /// order and the first accepted one is returned.
  using Accept = std::function<bool(const std::vector<int>&)>;
  std::optional<std::vector<int>> solve_accepting(int k, const Accept& accept,
                                                  const std::vector<int>& fixed = {},
                                                  const std::vector<std::uint64_t>& forbidden = {});

  std::uint64_t nodes() const noexcept { return nodes_; }

 private:
  const Graph& g_;
  Budget budget_;
  std::uint64_t nodes_ = 0;
  std::chrono::steady_clock::time_point start_;
};

/// Exact maximum clique (vertex list, ascending). Throws BudgetExceeded.
std::vector<graph::Vertex> max_clique(const Graph& g, const Budget& budget,
                                      std::uint64_t* nodes = nullptr);

/// DSATUR greedy coloring, 1-based.
std::vector<int> dsatur_greedy(const Graph& g);

OracleResult chromatic_number(const Graph& g, const Budget& budget = {});
/// Witness colors follow g.edges() order.
OracleResult chromatic_index(const Graph& g, const Budget& budget = {});
/// Witness: n vertex colors, then one color per edge in g.edges() order.
OracleResult total_chromatic_number(const Graph& g, const Budget& budget = {});
OracleResult independence_number(const Graph& g, const Budget& budget = {});

}  // namespace cayley::oracle
