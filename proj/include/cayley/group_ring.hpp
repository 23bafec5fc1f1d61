#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "cayley/abelian_group.hpp"

namespace cayley {

/// Coefficients of C * C^(-1) in Z[G]: counts[index(g)] is the number of
/// ordered pairs (c1, c2) in C x C with c1 - c2 = g. counts[0] == |C|.
struct DifferenceCounts {
  std::vector<int64_t> counts;

  int64_t identity_coefficient() const { return counts.at(0); }
  int64_t at(int64_t index) const { return counts.at(static_cast<size_t>(index)); }
};

DifferenceCounts difference_counts(const AbelianGroup& group,
                                   std::span<const GroupElement> set);

/// (n, |S|, k, mu1, mu2) generalized difference set certificate.
///
/// Canonical form: the identity is always in S and mu1 < mu2; when every
/// nonidentity count agrees, S = {0} and mu1 == mu2 (a difference set).
struct GdsCertificate {
  int64_t n = 0;
  int64_t k = 0;
  int64_t mu1 = 0;
  int64_t mu2 = 0;
  bool identity_in_s = true;
  std::vector<GroupElement> s;
  std::vector<GroupElement> c;

  int64_t s_size() const { return static_cast<int64_t>(s.size()); }
  bool is_difference_set() const { return mu1 == mu2; }
};

struct DifferenceSetParams {
  int64_t n = 0;
  int64_t k = 0;
  int64_t lambda = 0;

  friend bool operator==(const DifferenceSetParams&,
                         const DifferenceSetParams&) = default;
};

std::optional<GdsCertificate> verify_gds(const AbelianGroup& group,
                                         std::span<const GroupElement> set);
std::optional<DifferenceSetParams> verify_difference_set(
    const AbelianGroup& group, std::span<const GroupElement> set);

/// Checks C C^(-1) == (k - mu1) 0 + mu1 S + mu2 (G - S) (identity in S) or
/// the (k - mu2) form otherwise, coefficient by coefficient.
bool group_ring_identity_holds(const AbelianGroup& group,
                               const DifferenceCounts& counts,
                               const GdsCertificate& cert);

/// Smallest t (by index) with -C == C + t, if any.
std::optional<GroupElement> minus_one_multiplier_shift(
    const AbelianGroup& group, std::span<const GroupElement> set);
bool has_multiplier_minus_one(const AbelianGroup& group,
                              std::span<const GroupElement> set);

struct GdsSearchOptions {
  /// Emit only the orbit representative (smallest bitmask among all
  /// translates and negated translates) instead of every subset.
  bool canonical_only = false;
};

struct GdsSearchHit {
  uint64_t encoding = 0;  // bit i set <=> i in C
  GdsCertificate certificate;
};

/// Exhaustive search over subsets C of Z_n with 2 <= |C| <= n - 1, emitting
/// every GDS in increasing encoding order. 2 <= n <= 24.
///
/// Each orbit under translation and negation is verified once, at its
/// smallest encoding, which is always the first member reached.
/// Returns the number of hits emitted.
uint64_t search_gds(int n, const std::function<void(const GdsSearchHit&)>& emit,
                    const GdsSearchOptions& options = {});

/// Bit tricks for subsets of Z_n packed into an integer.
namespace cyclic_mask {
uint64_t rotate(uint64_t mask, int n, int shift);
uint64_t negate(uint64_t mask, int n);
/// Smallest encoding among all translates of mask and of -mask.
uint64_t orbit_minimum(uint64_t mask, int n);
std::vector<GroupElement> to_elements(uint64_t mask, int n);
uint64_t from_elements(std::span<const GroupElement> set, int n);
}  // namespace cyclic_mask

}  // namespace cayley
