#pragma once

/**
 * @file perm.hpp
 * @brief Permutations on {0..n-1}, and the small groups built from them.
 *
 * Composition is left-to-right everywhere in this library: `a * b` means
 * "apply a, then b", so (a * b)(i) = b(a(i)). Points are 0-based internally;
 * cycle notation in and out is 1-based, e.g. "(1,2)(3,4,5)".
 */

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace cayley::perm {

using Point = std::uint32_t;

class Permutation {
 public:
  /// Validates that `images` is a bijection on {0..images.size()-1}.
  explicit Permutation(std::vector<Point> images);

  static Permutation identity(std::size_t degree);

  /// 1-based disjoint cycles, e.g. {{1,2},{3,4,5}}. Unmentioned points are fixed.
  static Permutation from_cycles(std::size_t degree,
                                 const std::vector<std::vector<int>>& cycles);

  /// Parses "(1,2)(3,4,5)"; "()" or "" is the identity.
  static Permutation parse(std::size_t degree, std::string_view text);

  std::size_t degree() const noexcept { return images_.size(); }
  Point operator()(Point i) const { return images_[i]; }
  std::span<const Point> images() const noexcept { return images_; }

  Permutation inverse() const;
  Permutation pow(long long exponent) const;
  std::size_t order() const;
  bool is_identity() const noexcept;
  bool is_even() const;

  /// Same permutation on `degree` >= this->degree() points, extra points fixed.
  Permutation extended(std::size_t degree) const;

  /// Cycle notation, 1-based, fixed points omitted; identity is "()".
  std::string to_cycles() const;

  friend Permutation operator*(const Permutation& a, const Permutation& b);
  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  struct Trusted {};
  Permutation(std::vector<Point> images, Trusted) : images_(std::move(images)) {}

  std::vector<Point> images_;
};

/// "apply a, then b". Throws UsageError on degree mismatch.
Permutation compose(const Permutation& a, const Permutation& b);
Permutation inverse(const Permutation& a);
Permutation from_cycles(std::size_t degree, const std::vector<std::vector<int>>& cycles);

/// Generator helpers in cycle notation, 1-based: cycle(n, {1,2,3}) == (1,2,3).
Permutation cycle(std::size_t degree, const std::vector<int>& points);
/// (first, first+1, ..., last) on `degree` points.
Permutation consecutive_cycle(std::size_t degree, int first, int last);

enum class GroupKind { symmetric, alternating, cyclic };

std::string_view to_string(GroupKind kind);

/// Elements of a group, sorted lexicographically by image sequence.
/// Sorting puts the identity first and makes index_of a binary search.
class GroupElements {
 public:
  GroupElements(GroupKind kind, std::size_t degree, std::vector<Permutation> sorted);

  GroupKind kind() const noexcept { return kind_; }
  std::size_t degree() const noexcept { return degree_; }
  std::size_t size() const noexcept { return elements_.size(); }
  const std::vector<Permutation>& elements() const noexcept { return elements_; }
  const Permutation& operator[](std::size_t i) const { return elements_[i]; }

  std::optional<std::size_t> index_of(const Permutation& p) const;
  bool contains(const Permutation& p) const { return index_of(p).has_value(); }

 private:
  GroupKind kind_;
  std::size_t degree_;
  std::vector<Permutation> elements_;
};

inline constexpr std::size_t kDefaultDegreeBudget = 8;

/// Sn, An, or the cyclic group generated by (1,2,...,n). In the cyclic case
/// element r is the rotation i -> i+r, so canonical order matches Z_n.
GroupElements enumerate(GroupKind kind, std::size_t degree,
                        std::size_t degree_budget = kDefaultDegreeBudget);

/// Rotation by r as an element of the cyclic group of the given degree.
Permutation rotation(std::size_t degree, long long r);

enum class Side { left, right };

/// Which subgroup coset_decompose splits by.
struct SubgroupSpec {
  enum class Kind { cyclic_of_tau, point_stabilizer };
  Kind kind = Kind::cyclic_of_tau;
  Point point = 0;  ///< 0-based; only used for point_stabilizer

  static SubgroupSpec cyclic() { return {Kind::cyclic_of_tau, 0}; }
  static SubgroupSpec stabilizer(Point p) { return {Kind::point_stabilizer, p}; }
};

using Coset = std::vector<Permutation>;

/**
 * Partition `ambient` into cosets of a subgroup H.
 *
 * cyclic_of_tau: H = <tau>. Left cosets are {g * tau^i}, right cosets
 * {tau^i * g}; inside a coset, position i holds the element with exponent i
 * relative to the canonically-first element g of that coset.
 *
 * point_stabilizer: H = stabilizer of `point` within ambient. Cosets are
 * ordered H, H*tau, H*tau^2, ... (right side; tau^i * H for left) for as long
 * as the powers of tau land in new cosets, followed by any remainder cosets in
 * canonical order. Inside the coset H*x, position r holds H[r] * x, so
 * positions line up across cosets.
 */
std::vector<Coset> coset_decompose(const GroupElements& ambient, const Permutation& tau,
                                   Side side, SubgroupSpec subgroup);

}  // namespace cayley::perm
