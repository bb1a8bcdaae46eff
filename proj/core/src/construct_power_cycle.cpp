#include "cayley/construct.hpp"
#include "cayley/error.hpp"

namespace cayley::construct {

PseudoLatin::PseudoLatin(int k) : k_(k) {
  if (k < 1 || k % 2 == 0) throw UsageError("pseudo-Latin square needs odd k >= 1");
}

int PseudoLatin::entry(int i, int j) const {
  const int mod = k_ + 2;
  const int c = (k_ + 3) / 2;  // inverse of 2 mod k+2
  return (c * (i + j)) % mod + 1;
}

TotalResult total_color_power_cycle(std::size_t n, std::size_t k) {
  if (k < 3 || k % 2 == 0) throw UsageError("total_color_power_cycle needs odd k >= 3");
  if (2 * k >= n) throw UsageError("total_color_power_cycle needs k < n/2");
  if ((n - 1) % (k + 1) != 0) throw UsageError("n - 1 must be a multiple of k + 1");
  const std::size_t m = (n - 1) / (k + 1);
  if (m < 2 || m % 2 != 0) throw UsageError("(n - 1)/(k + 1) must be even and at least 2");

  const PseudoLatin square(static_cast<int>(k));
  const auto kk = static_cast<int>(k);
  const auto block_of = [&](std::size_t v) { return std::min(v / (k + 1), m - 1); };
  const auto offset_in_block = [&](std::size_t v) {
    return static_cast<int>(v - block_of(v) * (k + 1));
  };

  auto g = graph::power_cycle(n, k);
  TotalColorMatrix t(n);
  for (std::size_t v = 0; v < n; ++v) {
    const int r = offset_in_block(v);
    t.set(v, v, square.entry(r, r));
  }
  for (const auto& e : g.edges()) {
    const std::size_t i = e.u, j = e.v;  // i < j
    const auto bi = block_of(i), bj = block_of(j);
    int color = 0;
    if (bi == bj) {
      color = square.entry(offset_in_block(i), offset_in_block(j));
    } else if (bj == bi + 1 && j - i <= k) {
      const int gap = static_cast<int>(j - i);
      color = bi % 2 == 0 ? 2 * kk + 3 - gap : kk + 2 + gap;
    } else {
      // Wraps through vertex 0: j sits in the last block, i in the first.
      const int gap = static_cast<int>(i + n - j);
      color = kk + 2 + gap;
    }
    t.set(i, j, color);
  }

  auto report = chroma::verify_total(g, t);
  if (!report.proper) {
    throw VerificationFailure("power-of-cycle total coloring is improper at " +
                              report.witness->first.describe() + " / " +
                              report.witness->second.describe());
  }
  if (report.colors_used != 2 * k + 2) {
    throw VerificationFailure("power-of-cycle total coloring used " +
                              std::to_string(report.colors_used) + " colors, expected " +
                              std::to_string(2 * k + 2));
  }
  return {std::move(g), std::move(t), report, {}};
}

}  // namespace cayley::construct
