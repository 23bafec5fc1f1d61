#pragma once

#include <compare>
#include <complex>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

namespace cayley {

/// Raised when a precondition on a group, field or set is violated.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when a connection set breaks a structural invariant
/// (identity present, not symmetric).
class InvariantViolation : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when a requested size exceeds the exhaustive-computation budget.
class BudgetExceeded : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

namespace detail {
struct ElementTag {};
struct CharacterTag {};
}  // namespace detail

/// Residue tuple over the cyclic factors of a group. The tag keeps group
/// elements and character indices from being mixed up.
template <class Tag>
struct Coords {
  std::vector<int64_t> coords;

  Coords() = default;
  explicit Coords(std::vector<int64_t> c) : coords(std::move(c)) {}
  Coords(std::initializer_list<int64_t> c) : coords(c) {}

  size_t rank() const { return coords.size(); }
  int64_t operator[](size_t i) const { return coords[i]; }

  friend auto operator<=>(const Coords&, const Coords&) = default;
  friend bool operator==(const Coords&, const Coords&) = default;
};

using GroupElement = Coords<detail::ElementTag>;
using CharacterIndex = Coords<detail::CharacterTag>;

/// Finite abelian group Z_{d_1} x ... x Z_{d_t}, written additively.
///
/// Elements and characters are enumerated lexicographically on their
/// coordinates with the first factor most significant, so index(x) is the
/// mixed-radix number with digits x_1..x_t.
class AbelianGroup {
 public:
  explicit AbelianGroup(std::vector<int64_t> factors);

  static AbelianGroup cyclic(int64_t n);
  /// Z_2^t, the additive group of GF(2^t) in polynomial-basis coordinates.
  static AbelianGroup elementary_abelian_2(int t);

  std::span<const int64_t> factors() const { return factors_; }
  size_t rank() const { return factors_.size(); }
  int64_t order() const { return order_; }
  /// Exponent of the group (lcm of the factors).
  int64_t exponent() const { return exponent_; }

  GroupElement zero() const;
  bool contains(const GroupElement& g) const;
  bool is_zero(const GroupElement& g) const;

  GroupElement add(const GroupElement& g, const GroupElement& h) const;
  GroupElement sub(const GroupElement& g, const GroupElement& h) const;
  GroupElement neg(const GroupElement& g) const;

  int64_t index(const GroupElement& g) const;
  GroupElement element(int64_t index) const;
  std::vector<GroupElement> elements() const;

  int64_t index(const CharacterIndex& a) const;
  CharacterIndex character(int64_t index) const;

  /// Phase p of chi_a(x) = exp(2 pi i p / exponent()).
  int64_t character_phase(const CharacterIndex& a, const GroupElement& x) const;
  std::complex<double> character_value(const CharacterIndex& a,
                                       const GroupElement& x) const;
  /// Sum of chi_a over C. The imaginary part is zeroed when C is symmetric
  /// and |Im| is within 1e-9 * order().
  std::complex<double> character_sum(const CharacterIndex& a,
                                     std::span<const GroupElement> set) const;

  std::vector<GroupElement> subgroup_generated(
      std::span<const GroupElement> gens) const;

  /// True when set == -set.
  bool is_symmetric(std::span<const GroupElement> set) const;

  friend bool operator==(const AbelianGroup& a, const AbelianGroup& b) {
    return a.factors_ == b.factors_;
  }

 private:
  template <class Tag>
  void check_shape(const Coords<Tag>& c) const;

  std::vector<int64_t> factors_;
  int64_t order_ = 1;
  int64_t exponent_ = 1;
};

/// exp(2 pi i p / q), exact for quarter turns.
std::complex<double> root_of_unity(int64_t p, int64_t q);

/// Sorts and removes duplicates.
std::vector<GroupElement> normalize_set(std::vector<GroupElement> set);

}  // namespace cayley
