#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <vector>

#include "cayley/abelian_group.hpp"

namespace cayley {

/// Polynomial-basis coordinates of an element of GF(2^m); bit i is the
/// coefficient of x^i.
struct Gf2Element {
  uint32_t bits = 0;

  friend auto operator<=>(const Gf2Element&, const Gf2Element&) = default;
  friend bool operator==(const Gf2Element&, const Gf2Element&) = default;
};

/// x = y * z with y in GF(2^{m}) and z^{2^m + 1} = 1, inside GF(2^{2m}).
struct PolarDecomposition {
  Gf2Element y;
  Gf2Element z;
};

/// Arithmetic context for GF(2^m), 1 <= m <= 24.
///
/// The default modulus is the numerically smallest irreducible polynomial of
/// degree m. Fields of degree <= 16 multiply through log/antilog tables;
/// larger ones fall back to shift-and-reduce. Copies share the tables.
class Gf2Field {
 public:
  static constexpr int kMaxDegree = 24;

  explicit Gf2Field(int m);
  Gf2Field(int m, uint32_t modulus);

  int degree() const { return m_; }
  /// Modulus bit pattern including the leading x^m term.
  uint32_t modulus() const { return modulus_; }
  uint32_t size() const { return uint32_t{1} << m_; }

  Gf2Element zero() const { return {0}; }
  Gf2Element one() const { return {1}; }
  Gf2Element element(uint32_t bits) const;

  Gf2Element add(Gf2Element a, Gf2Element b) const { return {a.bits ^ b.bits}; }
  Gf2Element mul(Gf2Element a, Gf2Element b) const;
  Gf2Element square(Gf2Element a) const { return mul(a, a); }
  Gf2Element inv(Gf2Element a) const;
  Gf2Element pow(Gf2Element a, uint64_t e) const;
  /// a^{2^i}.
  Gf2Element frobenius(Gf2Element a, int i) const;

  /// Absolute trace to GF(2).
  int abs_trace(Gf2Element a) const;
  /// True when a^{2^d} == a, i.e. a lies in the subfield GF(2^d); d | m.
  bool in_subfield(Gf2Element a, int d) const;
  /// Trace from the subfield GF(2^d) to GF(2). Throws when a is not in it.
  int subfield_trace(Gf2Element a, int d) const;
  /// a^{2^{m/2}}; m must be even.
  Gf2Element conjugate(Gf2Element a) const;
  /// Unique polar decomposition in GF(2^{2k})*, k = m/2.
  PolarDecomposition polar_decompose(Gf2Element a) const;

  Gf2Element primitive_element() const { return {generator_}; }

  /// Coordinates of `a` as an element of Z_2^m whose lexicographic index
  /// equals a.bits.
  GroupElement to_group_element(Gf2Element a) const;
  Gf2Element from_group_element(const GroupElement& g) const;

  static bool is_irreducible(uint32_t poly, int m);
  static uint32_t smallest_irreducible(int m);

  friend bool operator==(const Gf2Field& a, const Gf2Field& b) {
    return a.m_ == b.m_ && a.modulus_ == b.modulus_;
  }

 private:
  struct Tables {
    std::vector<uint32_t> exp;  // length 2 * (q - 1)
    std::vector<uint32_t> log;  // length q, log[0] unused
  };

  Gf2Element slow_mul(Gf2Element a, Gf2Element b) const;
  void build();

  int m_ = 0;
  uint32_t modulus_ = 0;
  uint32_t trace_mask_ = 0;
  uint32_t generator_ = 1;
  std::shared_ptr<const Tables> tables_;
};

/// Field homomorphism GF(2^m) -> GF(2^{ms}) determined by the image of x.
class Gf2Embedding {
 public:
  Gf2Embedding(const Gf2Field& small, const Gf2Field& big);
  Gf2Element operator()(Gf2Element a) const;

 private:
  std::vector<Gf2Element> basis_images_;
};

}  // namespace cayley
