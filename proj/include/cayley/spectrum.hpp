#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cayley/graph.hpp"
#include "cayley/group_ring.hpp"

namespace cayley {

/// Values within this distance of an integer are stored as exact integers.
inline constexpr double kSnapTolerance = 1e-6;
/// Character-sum and oracle spectra must agree value-by-value within this.
inline constexpr double kOracleTolerance = 1e-6;

struct Eigenvalue {
  double value = 0.0;
  int64_t multiplicity = 0;
  /// value is an integer and comparisons against it are exact.
  bool exact = false;

  int64_t exact_value() const { return static_cast<int64_t>(value); }

  friend bool operator==(const Eigenvalue&, const Eigenvalue&) = default;
};

/// Eigenvalue multiset, grouped and sorted in descending order.
class Spectrum {
 public:
  Spectrum() = default;
  /// Snaps near-integers, then groups real values within 1e-8 * count.
  static Spectrum from_values(std::span<const double> values);

  const std::vector<Eigenvalue>& entries() const { return entries_; }
  int64_t total_multiplicity() const;
  size_t distinct_count() const { return entries_.size(); }
  bool all_exact() const;

  int64_t multiplicity_of(double value, double tol = kSnapTolerance) const;
  bool contains(double value, double tol = kSnapTolerance) const {
    return multiplicity_of(value, tol) > 0;
  }
  double largest() const { return entries_.front().value; }
  double smallest() const { return entries_.back().value; }
  /// Second entry of the descending multiset (equals largest() when the top
  /// eigenvalue is repeated).
  double second_largest() const;
  bool symmetric_about_zero(double tol = kSnapTolerance) const;

  /// sum(lambda * m) == 0 and sum(lambda^2 * m) == n * k; exact in integers
  /// when every value is exact.
  bool trace_identities_hold(int64_t n, int64_t k) const;

  /// Expanded values, descending.
  std::vector<double> values() const;

  friend bool operator==(const Spectrum&, const Spectrum&) = default;

 private:
  std::vector<Eigenvalue> entries_;
};

/// One eigenvalue chi(C) per character of G.
Spectrum spectrum_by_characters(const CayleyGraph& graph, unsigned jobs = 1);
/// Dense symmetric eigensolve of the adjacency matrix; n <= 4096.
Spectrum spectrum_oracle(const CayleyGraph& graph);
/// Same multiplicities, values within tol, entry by entry.
bool spectra_agree(const Spectrum& a, const Spectrum& b,
                   double tol = kOracleTolerance);

struct RamanujanVerdict {
  bool is_ramanujan = false;
  int64_t degree = 0;
  /// Largest |lambda| over eigenvalues with |lambda| != k; 0 if none.
  double second_largest_abs = 0.0;
  double bound = 0.0;  // 2 sqrt(k - 1)
  bool connected = false;
  /// A non-integer eigenvalue sits within 1e-6 of the bound.
  bool boundary_flag = false;
  std::string reason;
};

RamanujanVerdict ramanujan_check(const Spectrum& spectrum, int64_t k,
                                 const GraphStats& stats);

/// k minus the second-largest eigenvalue of the multiset (0 when the graph
/// is disconnected).
double spectral_gap(const Spectrum& spectrum, int64_t k);

struct CrossingBound {
  double bound = 0.0;
  int64_t actual = 0;

  bool holds() const { return static_cast<double>(actual) >= bound - 1e-9; }
};

/// Expander crossing bound e(A, B) >= (k - lambda_2)|A||B|/|V| evaluated for
/// many partitions of one graph.
class CrossingLemma {
 public:
  CrossingLemma(const CayleyGraph& graph, const Spectrum& spectrum);

  /// Throws InvalidArgument unless omega1 and omega2 partition V.
  CrossingBound evaluate(std::span<const int64_t> omega1,
                         std::span<const int64_t> omega2) const;
  double gap() const { return gap_; }

 private:
  int64_t n_ = 0;
  int64_t k_ = 0;
  double gap_ = 0.0;
  std::vector<int64_t> table_;
};

CrossingBound crossing_lemma_bound(const CayleyGraph& graph,
                                   const Spectrum& spectrum,
                                   std::span<const int64_t> omega1,
                                   std::span<const int64_t> omega2);

/// min |Gamma(W)| / |W| over nonempty W with |W| <= n/2, by exhaustive scan;
/// n <= 20.
double vertex_expansion(const CayleyGraph& graph);

/// { +-sqrt(k - mu1 + (mu1 - mu2) chi(S)) : chi nonprincipal }, sorted
/// descending without duplicates.
std::vector<double> gds_predicted_eigenvalues(const AbelianGroup& group,
                                              const GdsCertificate& cert);

/// Which sufficient conditions from the GDS eigenvalue bounds would fire.
/// Recorded alongside the spectrum-based verdict, never instead of it.
struct GdsFilterReport {
  bool connected_filter = false;   // -mu1 + (mu1 - mu2)|S| < k^2 - k
  bool ramanujan_filter = false;   // -mu1 + (mu1 - mu2)|S| < 3k - 4
  bool s_is_subgroup = false;
  /// Subgroup-S forms, present only when S is a subgroup.
  std::optional<bool> subgroup_connected;   // (mu1 - mu2)|S| - mu1 < k^2 - k
  std::optional<bool> subgroup_ramanujan;   // (mu1 - mu2)|S| <= 3k + mu1 - 4
};

GdsFilterReport gds_filters(const AbelianGroup& group, const GdsCertificate& cert);

}  // namespace cayley
