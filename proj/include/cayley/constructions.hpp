#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cayley/gf2m.hpp"
#include "cayley/graph.hpp"
#include "cayley/spectrum.hpp"

namespace cayley {

enum class DiscrepancyKind {
  /// A computed eigenvalue is missing from predicted_eigenvalues and +-degree,
  /// or is not an integer.
  kSpectrumOutsidePrediction,
  kDegreeMismatch,
  /// The computed Ramanujan verdict differs from the closed-form claim.
  kClaimContradicted,
};

const char* to_string(DiscrepancyKind kind);

struct Discrepancy {
  DiscrepancyKind kind;
  std::string detail;
};

/// A named explicit construction with its closed-form predictions.
///
/// Invariant: predicted_degree == connection.size() after certify(), and no
/// kSpectrumOutsidePrediction entry exists iff the computed spectrum lies in
/// predicted_eigenvalues together with +-degree.
struct ConstructionReport {
  std::string name;
  std::vector<std::pair<std::string, int64_t>> parameters;
  ConnectionSet connection;
  int64_t predicted_degree = 0;
  /// Exact values, descending.
  std::vector<int64_t> predicted_eigenvalues;
  /// Closed-form Ramanujan claim, when the construction makes one.
  std::optional<bool> predicted_ramanujan;
  /// Where each prediction comes from, including formula corrections.
  std::vector<std::string> notes;
  std::vector<Discrepancy> discrepancies;

  bool has_discrepancy(DiscrepancyKind kind) const;
};

struct Certification {
  GraphStats stats;
  Spectrum spectrum;
  RamanujanVerdict verdict;
};

/// Builds the graph, computes stats, character spectrum and verdict, and
/// appends every mismatch with the report's predictions.
Certification certify(ConstructionReport& report, unsigned jobs = 1);

/// Sum over d in `set` of (-1)^{Tr(a d)}.
int64_t field_character_sum(const Gf2Field& field, Gf2Element a,
                            std::span<const Gf2Element> set);

// Product-group symmetric-difference set in Z_s x Z_r.

/// D = (C0 x Z_r) xor (Z_s x C1) with C0, C1 the nonzero even residues.
/// s, r even and >= 4.
ConstructionReport theorem33_set(int64_t s, int64_t r);
/// (2s + 4 - r) r > 16 and (2r + 4 - s) s > 16, i.e.
/// max(r - 2, s - 2) < 2 sqrt(sr/2 - 3).
bool theorem33_condition(int64_t s, int64_t r);
/// s >= 4 and 2s > r >= s.
bool theorem33_hypothesis(int64_t s, int64_t r);
/// Character class of chi_{(a1, a2)}: 0 for the principal character, else
/// 1..8 by whether a1 is 0, s/2 or other and a2 is 0, r/2 or other.
int theorem33_case(int64_t s, int64_t r, int64_t a1, int64_t a2);
/// chi(D) on a character class; class 5 is -(s - 2)(r - 2)/2.
int64_t theorem33_case_value(int64_t s, int64_t r, int case_id);

// Trace sets over GF(2^m), viewed in the additive group Z_2^m.

/// {z != 0 : Tr(z) = i, Tr(1/z) = j}.
std::vector<Gf2Element> dij_elements(const Gf2Field& field, int i, int j);
/// (2^m - 1 - (-1)^j - (-1)^i + (-1)^{i+j} k_m(1)) / 4; m >= 2.
int64_t dij_cardinality(int m, int i, int j);
/// dij_elements as group elements of Z_2^m (may be empty, so not a
/// ConnectionSet).
std::vector<GroupElement> dij_set(int m, int i, int j);

/// D_{1,1}; 1 <= m <= 20. Eigenvalue predictions need the full Kloosterman
/// table and are filled in for m <= 12.
ConstructionReport kloosterman_trace_set(int m);

/// {x != 0 : Tr_m(x + xbar) = Tr_m(x xbar) = 1} in GF(2^{2m}), xbar = x^{2^m}.
std::vector<Gf2Element> polar_trace_elements(const Gf2Field& big);
/// 1 <= m <= 10; the graph lives on Z_2^{2m}.
ConstructionReport polar_trace_set(int m);
/// Closed-form chi_a(D) in both parity regimes for a not in {0, 1}, with
/// chi_a(x) = (-1)^{Tr(a x)}.
int64_t polar_trace_character_value(const Gf2Field& big, Gf2Element a);

/// Support of the inner-product bent function on Z_2^u x Z_2^u; 1 <= u <= 6.
ConstructionReport bent_hadamard_set(int u);

}  // namespace cayley
