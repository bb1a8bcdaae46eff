#include <algorithm>
#include <bit>

#include "cayley/construct.hpp"
#include "cayley/error.hpp"

namespace cayley::construct {

using graph::Vertex;
using perm::Permutation;

std::vector<Permutation> sym_generators(std::size_t n) {
  if (n < 3) throw UsageError("sym generators need n >= 3");
  auto sigma = perm::consecutive_cycle(n, 1, static_cast<int>(n));
  return {perm::cycle(n, {1, 2}), sigma, sigma.inverse()};
}

namespace {

// Palette maps of {0,1,2}: the three rotations, then the three reflections.
constexpr int kPalette[6][3] = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}, {0, 2, 1}, {2, 1, 0}, {1, 0, 2}};

// Per-coset palette map of the 3-periodic pattern so that the two ends of
// every (1,2)-edge get different vertex colors. Rotations are tried first.
// Plain backtracking in BFS order.
class OffsetSearch {
 public:
  struct Link {
    std::size_t other;
    int my_pos;
    int other_pos;
  };

  OffsetSearch(std::vector<std::vector<Link>> links, std::uint64_t budget)
      : links_(std::move(links)), budget_(budget), choice_(links_.size(), -1) {}

  std::optional<std::vector<int>> run() {
    std::vector<unsigned> domain(links_.size(), 0x3F);
    if (!dfs(domain, 0)) return std::nullopt;
    return choice_;
  }

 private:
  // Most constrained coset first, with forward checking on its links.
  bool dfs(std::vector<unsigned>& domain, std::size_t assigned) {
    if (assigned == links_.size()) return true;
    if (++nodes_ > budget_) throw BudgetExceeded("coset palette search budget exhausted");
    std::size_t best = links_.size();
    int best_size = 7;
    for (std::size_t c = 0; c < links_.size(); ++c) {
      if (choice_[c] >= 0) continue;
      const int size = std::popcount(domain[c]);
      if (size == 0) return false;
      if (size < best_size) {
        best = c;
        best_size = size;
      }
    }
    for (int o = 0; o < 6; ++o) {
      if (!((domain[best] >> o) & 1U)) continue;
      auto next = domain;
      bool wiped = false;
      for (const auto& l : links_[best]) {
        if (choice_[l.other] >= 0) continue;
        const int mine = kPalette[o][l.my_pos % 3];
        for (int q = 0; q < 6; ++q) {
          if (kPalette[q][l.other_pos % 3] == mine) next[l.other] &= ~(1U << q);
        }
        wiped = wiped || next[l.other] == 0;
      }
      if (wiped) continue;
      choice_[best] = o;
      if (dfs(next, assigned + 1)) return true;
      choice_[best] = -1;
    }
    return false;
  }

  std::vector<std::vector<Link>> links_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  std::vector<int> choice_;
};

}  // namespace

SymResult total_color_sym(std::size_t n, std::uint64_t search_budget) {
  if (n < 3 || n % 3 != 0) throw UsageError("total_color_sym needs 3 | n");
  const auto elements = perm::enumerate(perm::GroupKind::symmetric, n);
  const auto gens = sym_generators(n);
  const auto& transposition = gens[0];
  const auto& sigma = gens[1];
  auto g = graph::cayley_group(elements, gens);

  const auto cosets = perm::coset_decompose(elements, sigma, perm::Side::left, perm::SubgroupSpec::cyclic());
  std::vector<std::size_t> coset_of(elements.size());
  std::vector<int> position(elements.size());
  for (std::size_t c = 0; c < cosets.size(); ++c) {
    for (std::size_t p = 0; p < cosets[c].size(); ++p) {
      const auto idx = *elements.index_of(cosets[c][p]);
      coset_of[idx] = c;
      position[idx] = static_cast<int>(p);
    }
  }

  std::vector<std::vector<OffsetSearch::Link>> links(cosets.size());
  for (std::size_t x = 0; x < elements.size(); ++x) {
    const auto y = *elements.index_of(elements[x] * transposition);
    if (coset_of[x] == coset_of[y]) {
      throw VerificationFailure("(1,2) joins two elements of the same <sigma>-coset");
    }
    links[coset_of[x]].push_back({coset_of[y], position[x], position[y]});
  }
  auto offsets = OffsetSearch(std::move(links), search_budget).run();
  if (!offsets) {
    throw VerificationFailure("no coset palette separates the (1,2)-matching at n=" + std::to_string(n));
  }

  TotalColorMatrix t(elements.size());
  for (std::size_t x = 0; x < elements.size(); ++x) {
    const auto& pal = kPalette[(*offsets)[coset_of[x]]];
    const int p = position[x];
    t.set(x, x, pal[p % 3] + 1);
    const auto next = *elements.index_of(elements[x] * sigma);
    t.set(x, next, pal[(p + 2) % 3] + 1);
    const auto partner = *elements.index_of(elements[x] * transposition);
    t.set(x, partner, 4);
  }

  auto report = chroma::verify_total(g, t);
  if (!report.proper) {
    throw VerificationFailure("Sn total coloring is improper at " + report.witness->first.describe() +
                              " / " + report.witness->second.describe());
  }
  SymResult out;
  out.graph = std::move(g);
  out.matrix = std::move(t);
  out.report = report;
  out.rotations_only = std::all_of(offsets->begin(), offsets->end(), [](int o) { return o < 3; });
  if (!out.rotations_only) out.notes.push_back("some cosets need a reflected palette");
  out.coset_palettes = std::move(*offsets);
  out.notes.push_back(std::to_string(cosets.size()) + " cosets of <(1,...,n)>");
  return out;
}

}  // namespace cayley::construct
