// Conformable colorings of powers of cycles.
//
// Both parities start from a block coloring of a power of a cycle: cut Z_N
// into B consecutive blocks of length >= k+1 and give the t-th vertex of every
// block color t. Equal colors in neighbouring blocks are a full block length
// apart, so the coloring is proper. Classes are then split, since any subset
// of an independent set is independent, until there are exactly 2k+1.

#include <algorithm>
#include <limits>
#include <optional>
#include <numeric>

#include "cayley/construct.hpp"
#include "cayley/error.hpp"

namespace cayley::construct {

namespace {

// Class t holds the t-th vertex of every block longer than t.
std::vector<std::vector<std::size_t>> block_classes(const std::vector<std::size_t>& block_sizes) {
  const auto longest = *std::max_element(block_sizes.begin(), block_sizes.end());
  std::vector<std::vector<std::size_t>> classes(longest);
  std::size_t start = 0;
  for (auto size : block_sizes) {
    for (std::size_t t = 0; t < size; ++t) classes[t].push_back(start + t);
    start += size;
  }
  return classes;
}

// Extra vertices beyond (k+1) per block, as a non-increasing sequence whose
// conjugate is `levels` (the sizes of the classes past k+1).
std::vector<std::size_t> blocks_from_levels(std::size_t blocks, std::size_t k,
                                            const std::vector<std::size_t>& levels) {
  std::vector<std::size_t> sizes(blocks, k + 1);
  for (auto level : levels) {
    for (std::size_t b = 0; b < level; ++b) ++sizes[b];
  }
  return sizes;
}

// Minimum number of odd parts a class of this size can be cut into.
std::size_t min_odd_parts(std::size_t size) { return size % 2 == 1 ? 1 : 2; }

// Picks class sizes (levels) for the R leftover vertices, each level at most
// `blocks`, minimising the total minimum odd-part count.
std::optional<std::vector<std::size_t>> cheapest_levels(std::size_t remainder, std::size_t blocks) {
  const std::size_t inf = std::numeric_limits<std::size_t>::max() / 2;
  std::vector<std::size_t> cost(remainder + 1, inf), choice(remainder + 1, 0);
  cost[0] = 0;
  for (std::size_t r = 1; r <= remainder; ++r) {
    for (std::size_t part = std::min(r, blocks); part >= 1; --part) {
      const auto c = cost[r - part] + min_odd_parts(part);
      if (c < cost[r]) {
        cost[r] = c;
        choice[r] = part;
      }
    }
  }
  if (cost[remainder] >= inf) return std::nullopt;
  std::vector<std::size_t> levels;
  for (std::size_t r = remainder; r > 0; r -= choice[r]) levels.push_back(choice[r]);
  std::sort(levels.rbegin(), levels.rend());
  return levels;
}

// Cuts each class into the given number of pieces; all but the last piece
// have size `piece` (1 for odd n, 2 for even n).
std::vector<std::vector<std::size_t>> split_classes(const std::vector<std::vector<std::size_t>>& classes,
                                                    const std::vector<std::size_t>& pieces,
                                                    std::size_t piece) {
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t c = 0; c < classes.size(); ++c) {
    const auto& cls = classes[c];
    std::size_t pos = 0;
    for (std::size_t p = 0; p + 1 < pieces[c]; ++p) {
      out.emplace_back(cls.begin() + static_cast<std::ptrdiff_t>(pos),
                       cls.begin() + static_cast<std::ptrdiff_t>(pos + piece));
      pos += piece;
    }
    out.emplace_back(cls.begin() + static_cast<std::ptrdiff_t>(pos), cls.end());
  }
  return out;
}

std::vector<std::vector<std::size_t>> odd_partition(std::size_t n, std::size_t k) {
  const std::size_t target = 2 * k + 1;
  const std::size_t max_blocks = n / (k + 1);
  for (std::size_t blocks = max_blocks; blocks >= 1; --blocks) {
    const std::size_t remainder = n - blocks * (k + 1);
    auto levels = cheapest_levels(remainder, blocks);
    if (!levels) continue;
    auto classes = block_classes(blocks_from_levels(blocks, k, *levels));

    std::vector<std::size_t> pieces;
    std::size_t total = 0;
    for (const auto& cls : classes) {
      pieces.push_back(min_odd_parts(cls.size()));
      total += pieces.back();
    }
    if (total > target) continue;
    // Parities agree (both sides are odd), so the gap is even; spend it two
    // pieces at a time on classes that can take them.
    for (std::size_t c = 0; c < classes.size() && total < target; ++c) {
      while (total < target && pieces[c] + 2 <= classes[c].size()) {
        pieces[c] += 2;
        total += 2;
      }
    }
    if (total != target) continue;
    return split_classes(classes, pieces, 1);
  }
  throw VerificationFailure("no conformable block partition of C_" + std::to_string(n) + "^" +
                            std::to_string(k) + " found");
}

std::vector<std::vector<std::size_t>> even_partition(std::size_t n, std::size_t k) {
  // Antipodal pairs {i, i + n/2} are independent since k < n/2. Two pairs
  // clash iff their indices are within k of each other in Z_{n/2}, so the
  // pairs are colored as the power of cycle on Z_{n/2}.
  const std::size_t half = n / 2;
  std::vector<std::vector<std::size_t>> pair_classes;
  if (2 * k >= half) {
    for (std::size_t i = 0; i < half; ++i) pair_classes.push_back({i});
  } else {
    const std::size_t blocks = half / (k + 1);
    const std::size_t remainder = half - blocks * (k + 1);
    std::vector<std::size_t> levels;
    for (std::size_t r = remainder; r > 0; r -= std::min(r, blocks)) levels.push_back(std::min(r, blocks));
    pair_classes = block_classes(blocks_from_levels(blocks, k, levels));
  }
  if (pair_classes.size() > 2 * k + 1) {
    throw VerificationFailure("antipodal pairs of C_" + std::to_string(n) + "^" + std::to_string(k) +
                              " need more than 2k+1 classes");
  }
  std::vector<std::vector<std::size_t>> classes;
  for (const auto& pc : pair_classes) {
    std::vector<std::size_t> cls;
    for (auto i : pc) {
      cls.push_back(i);
      cls.push_back(i + half);
    }
    std::sort(cls.begin(), cls.end());
    classes.push_back(std::move(cls));
  }
  return classes;
}

}  // namespace

VertexResult conformable_partition(std::size_t n, std::size_t k) {
  if (k < 1 || 2 * k >= n) throw UsageError("conformable_partition needs 1 <= k < n/2");
  if (n % 2 == 1 && 3 * (k + 1) >= n) {
    throw UsageError("odd n needs k + 1 < n/3 (n=" + std::to_string(n) + ", k=" + std::to_string(k) + ")");
  }
  auto classes = n % 2 == 0 ? even_partition(n, k) : odd_partition(n, k);

  VertexColoring c;
  c.colors.assign(n, 0);
  for (std::size_t i = 0; i < classes.size(); ++i) {
    for (auto v : classes[i]) c.colors[v] = static_cast<int>(i) + 1;
  }
  auto g = graph::power_cycle(n, k);
  auto check = chroma::verify_conformable(g, c);
  if (!check.conformable) {
    throw VerificationFailure("conformable partition of C_" + std::to_string(n) + "^" +
                              std::to_string(k) + " failed: " + check.reason);
  }
  std::vector<std::string> notes;
  notes.push_back(std::to_string(classes.size()) + " nonempty classes of " +
                  std::to_string(2 * k + 1));
  return {std::move(g), std::move(c), check.coloring, std::move(notes)};
}

}  // namespace cayley::construct
