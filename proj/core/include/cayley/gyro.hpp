#pragma once

// The order-2m 2-gyrogroup. Labels 0..m-1 form T1 (a copy of Z_m), labels
// m..2m-1 form T2. The operation is given case by case on residues
// (label mod m) with four linear formulas; which formula serves which
// argument class, and whether the result is lifted into T2, is a Variant.

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace cayley::gyro {

using Label = std::uint32_t;

/// Argument classes, in this order: (T1,T1), (T1,T2), (T2,T1), (T2,T2).
enum class ArgClass : std::uint8_t { t1t1 = 0, t1t2 = 1, t2t1 = 2, t2t2 = 3 };

/// The four right-hand sides, in the order they are listed for the 2-gyrogroup:
///   0: i + j
///   1: i + j
///   2: i + (m/2 - 1) j
///   3: (m/2 - 1) i + (m/2 + 1) j      (swapped: (m/2 + 1) i + (m/2 - 1) j)
struct Variant {
  std::array<std::uint8_t, 4> formula{0, 1, 2, 3};  ///< formula index per ArgClass
  bool swap_last = false;                          ///< swap formula 3's coefficients
  std::array<bool, 4> lift{false, true, true, false};  ///< add m to the result, per ArgClass

  std::string describe() const;
  friend bool operator==(const Variant&, const Variant&) = default;
};

/// Every assignment of the four formulas to the four argument classes, both
/// coefficient orders for formula 3, and all 16 lift patterns. Deterministic
/// order: formula permutations lexicographically, then swap, then lift mask.
std::vector<Variant> candidate_variants();

/// The reading taken literally from the displayed case list, with the
/// duplicated (T2,T2) label read as (T2,T1).
Variant literal_variant();

bool is_power_of_two(std::size_t m);

class GyroTable {
 public:
  /// m must be a power of two, m >= 4.
  GyroTable(std::size_t m, Variant variant);

  std::size_t m() const noexcept { return m_; }
  std::size_t order() const noexcept { return 2 * m_; }
  const Variant& variant() const noexcept { return variant_; }

  Label add(Label a, Label b) const { return table_[a * order() + b]; }
  bool in_t1(Label a) const noexcept { return a < m_; }
  Label residue(Label a) const noexcept { return static_cast<Label>(a % m_); }
  /// m/2 + m, the element whose left translation matches T1 with T2.
  Label half_reflection() const noexcept { return static_cast<Label>(m_ / 2 + m_); }

  /// The x with x (+) a = 0, if one exists.
  std::optional<Label> left_inverse(Label a) const { return inverse_[a]; }
  /// Throws VerificationFailure if `a` has no left inverse.
  Label inverse(Label a) const;

  /// gyr[a,b]c = (-)(a(+)b) (+) (a (+) (b (+) c)).
  Label gyr(Label a, Label b, Label c) const;

  /// Row-major 2m x 2m result table.
  const std::vector<Label>& table() const noexcept { return table_; }

 private:
  std::size_t m_;
  Variant variant_;
  std::vector<Label> table_;
  std::vector<std::optional<Label>> inverse_;
};

GyroTable build_table(std::size_t m, const Variant& variant);

Label gyro_inverse(const GyroTable& t, Label a);
Label gyr(const GyroTable& t, Label a, Label b, Label c);

struct AxiomCheck {
  std::string name;
  bool passed = true;
  std::vector<Label> counterexample;  ///< arguments of the first failure
};

struct AxiomReport {
  std::vector<AxiomCheck> checks;  ///< left identity, left inverse, automorphism,
                                   ///< gyroassociativity, left loop
  bool all_passed() const;
  const AxiomCheck* find(const std::string& name) const;
};

/// Exhaustive check over all pairs/triples (and quadruples for the
/// automorphism property). Stops each check at its first counterexample.
AxiomReport verify_axioms(const GyroTable& t);

/// T1 closed under (+), T2 (+) T2 inside T1, and every T2 element involutive.
bool satisfies_structure(const GyroTable& t);

/// First candidate variant that satisfies the structural facts and all
/// axioms at this m. Throws VerificationFailure if none does.
Variant select_variant(std::size_t m);

/// Convenience: the table for the variant select_variant(m) returns.
GyroTable default_table(std::size_t m);

/// Whether x ~ x (+) s (right translation) would also produce an undirected
/// graph for this generating set.
bool right_translation_undirected(const GyroTable& t, const std::vector<Label>& gens);

}  // namespace cayley::gyro
