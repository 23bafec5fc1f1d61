#include "cayley/constructions.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "cayley/kloosterman.hpp"

namespace cayley {

namespace {

std::vector<int64_t> descending_unique(std::set<int64_t> values) {
  return {values.rbegin(), values.rend()};
}

std::vector<GroupElement> to_group(const Gf2Field& field,
                                   std::span<const Gf2Element> xs) {
  std::vector<GroupElement> out;
  out.reserve(xs.size());
  for (auto x : xs) out.push_back(field.to_group_element(x));
  return out;
}

void require_even_at_least_4(int64_t v, const char* name) {
  if (v < 4 || v % 2 != 0)
    throw InvalidArgument(std::string(name) + " must be an even integer >= 4, got " +
                          std::to_string(v));
}

ConstructionReport make_report(std::string name,
                               std::vector<std::pair<std::string, int64_t>> params,
                               ConnectionSet connection) {
  ConstructionReport rep{std::move(name), std::move(params), std::move(connection),
                         0, {}, std::nullopt, {}, {}};
  return rep;
}

constexpr int64_t kTheorem33MaxOrder = int64_t{1} << 20;

}  // namespace

const char* to_string(DiscrepancyKind kind) {
  switch (kind) {
    case DiscrepancyKind::kSpectrumOutsidePrediction:
      return "spectrum_outside_prediction";
    case DiscrepancyKind::kDegreeMismatch:
      return "degree_mismatch";
    case DiscrepancyKind::kClaimContradicted:
      return "claim_contradicted";
  }
  return "unknown";
}

bool ConstructionReport::has_discrepancy(DiscrepancyKind kind) const {
  return std::any_of(discrepancies.begin(), discrepancies.end(),
                     [kind](const Discrepancy& d) { return d.kind == kind; });
}

Certification certify(ConstructionReport& report, unsigned jobs) {
  const CayleyGraph graph(report.connection);
  Certification out;
  out.stats = graph_stats(graph);
  out.spectrum = spectrum_by_characters(graph, jobs);
  const int64_t k = graph.degree();
  out.verdict = ramanujan_check(out.spectrum, k, out.stats);

  if (k != report.predicted_degree)
    report.discrepancies.push_back(
        {DiscrepancyKind::kDegreeMismatch,
         "degree " + std::to_string(k) + " but closed form gives " +
             std::to_string(report.predicted_degree)});

  const std::set<int64_t> allowed(report.predicted_eigenvalues.begin(),
                                  report.predicted_eigenvalues.end());
  for (const auto& e : out.spectrum.entries()) {
    if (!e.exact) {
      report.discrepancies.push_back(
          {DiscrepancyKind::kSpectrumOutsidePrediction,
           "non-integer eigenvalue " + std::to_string(e.value)});
      continue;
    }
    const int64_t v = e.exact_value();
    if (v == k || v == -k || allowed.contains(v)) continue;
    report.discrepancies.push_back(
        {DiscrepancyKind::kSpectrumOutsidePrediction,
         "eigenvalue " + std::to_string(v) + " (multiplicity " +
             std::to_string(e.multiplicity) + ") not in the predicted set"});
  }

  if (report.predicted_ramanujan &&
      *report.predicted_ramanujan != out.verdict.is_ramanujan)
    report.discrepancies.push_back(
        {DiscrepancyKind::kClaimContradicted,
         std::string("closed form claims ") +
             (*report.predicted_ramanujan ? "Ramanujan" : "not Ramanujan") +
             ", spectrum gives " +
             (out.verdict.is_ramanujan ? "Ramanujan" : "not Ramanujan") + " (" +
             out.verdict.reason + ")"});
  return out;
}

int64_t field_character_sum(const Gf2Field& field, Gf2Element a,
                            std::span<const Gf2Element> set) {
  int64_t sum = 0;
  for (auto d : set) sum += field.abs_trace(field.mul(a, d)) ? -1 : 1;
  return sum;
}

bool theorem33_condition(int64_t s, int64_t r) {
  return (2 * s + 4 - r) * r > 16 && (2 * r + 4 - s) * s > 16;
}

bool theorem33_hypothesis(int64_t s, int64_t r) {
  return s >= 4 && 2 * s > r && r >= s;
}

int theorem33_case(int64_t s, int64_t r, int64_t a1, int64_t a2) {
  if (a1 < 0 || a1 >= s || a2 < 0 || a2 >= r)
    throw InvalidArgument("character index outside Z_s x Z_r");
  // 0: zero, 1: half, 2: other.
  const int c1 = a1 == 0 ? 0 : (2 * a1 == s ? 1 : 2);
  const int c2 = a2 == 0 ? 0 : (2 * a2 == r ? 1 : 2);
  static constexpr int kTable[3][3] = {{0, 1, 2}, {3, 5, 7}, {4, 6, 8}};
  return kTable[c1][c2];
}

int64_t theorem33_case_value(int64_t s, int64_t r, int case_id) {
  switch (case_id) {
    case 0: return s * r / 2 - 2;
    case 1: return r - 2;
    case 2: return -2;
    case 3: return s - 2;
    case 4: return -2;
    case 5: return -(s - 2) * (r - 2) / 2;
    case 6: return r - 2;
    case 7: return s - 2;
    case 8: return -2;
    default: throw InvalidArgument("character class must be 0..8");
  }
}

ConstructionReport theorem33_set(int64_t s, int64_t r) {
  require_even_at_least_4(s, "s");
  require_even_at_least_4(r, "r");
  if (s * r > kTheorem33MaxOrder)
    throw BudgetExceeded("s * r exceeds 2^20");

  AbelianGroup group({s, r});
  std::vector<GroupElement> d;
  for (int64_t x = 0; x < s; ++x)
    for (int64_t y = 0; y < r; ++y) {
      const bool in_first = x % 2 == 0 && x != 0;   // C0 x Z_r
      const bool in_second = y % 2 == 0 && y != 0;  // Z_s x C1
      if (in_first != in_second) d.push_back(GroupElement{x, y});
    }

  auto rep = make_report("theorem33", {{"s", s}, {"r", r}},
                         ConnectionSet(group, std::move(d)));
  rep.predicted_degree = s * r / 2 - 2;
  rep.predicted_eigenvalues = descending_unique(
      {s * r / 2 - 2, r - 2, s - 2, -2, -(s - 2) * (r - 2) / 2});
  rep.predicted_ramanujan = theorem33_condition(s, r);
  rep.notes = {
      "C0 and C1 are the nonzero elements of the index-2 subgroups",
      "class (a1 = s/2, a2 = r/2) eigenvalue re-derived as -(s-2)(r-2)/2; "
      "the printed -(s-2)(r-2)/4 gives -1 at s = r = 4, absent from the "
      "computed spectrum",
      "Ramanujan claim is the max(r-2, s-2) < 2 sqrt(sr/2-3) criterion; it "
      "does not bound the -(s-2)(r-2)/2 eigenvalue",
  };
  if (!theorem33_hypothesis(s, r) && !theorem33_hypothesis(r, s))
    rep.notes.push_back("outside the s >= 4, 2s > r >= s hypothesis");
  return rep;
}

std::vector<Gf2Element> dij_elements(const Gf2Field& field, int i, int j) {
  if ((i != 0 && i != 1) || (j != 0 && j != 1))
    throw InvalidArgument("trace indices must be 0 or 1");
  std::vector<Gf2Element> out;
  for (uint32_t b = 1; b < field.size(); ++b) {
    const Gf2Element z{b};
    if (field.abs_trace(z) == i && field.abs_trace(field.inv(z)) == j)
      out.push_back(z);
  }
  return out;
}

int64_t dij_cardinality(int m, int i, int j) {
  if (m < 2) throw InvalidArgument("closed-form D_{i,j} size needs m >= 2");
  if (m > 62) throw BudgetExceeded("m too large for 64-bit cardinality");
  if ((i != 0 && i != 1) || (j != 0 && j != 1))
    throw InvalidArgument("trace indices must be 0 or 1");
  const int64_t si = i ? -1 : 1;
  const int64_t sj = j ? -1 : 1;
  const int64_t num = (int64_t{1} << m) - 1 - sj - si +
                      si * sj * kloosterman_one_recursive(m);
  if (num % 4 != 0)
    throw std::logic_error("D_{i,j} closed form is not an integer");
  return num / 4;
}

std::vector<GroupElement> dij_set(int m, int i, int j) {
  if (m < 1 || m > 20) throw BudgetExceeded("D_{i,j} enumeration needs 1 <= m <= 20");
  const Gf2Field field(m);
  const auto xs = dij_elements(field, i, j);
  return to_group(field, xs);
}

ConstructionReport kloosterman_trace_set(int m) {
  if (m < 1 || m > 20)
    throw BudgetExceeded("kloosterman-trace needs 1 <= m <= 20, got " +
                         std::to_string(m));
  const Gf2Field field(m);
  const auto d = dij_elements(field, 1, 1);
  const int64_t k1 = kloosterman_one_recursive(m);

  auto rep = make_report("kloosterman-trace", {{"m", m}},
                         ConnectionSet(AbelianGroup::elementary_abelian_2(m),
                                  to_group(field, d)));
  rep.predicted_degree = ((int64_t{1} << m) + 1 + k1) / 4;
  rep.predicted_ramanujan = k1 > 3;
  rep.notes = {
      "degree (2^m + 1 + k_m(1))/4 taken with positive sign",
      "Ramanujan claim is k_m(1) > 3",
  };

  if (m <= KloostermanTable::kMaxTableDegree) {
    const auto table = KloostermanTable::compute(field);
    std::set<int64_t> predicted{-rep.predicted_degree};
    for (uint32_t a = 2; a < field.size(); ++a) {
      const int64_t num = -table.at({a}) + table.at({a ^ 1u});
      if (num % 4 != 0)
        throw std::logic_error("Kloosterman eigenvalue formula is not an integer");
      predicted.insert(num / 4);
    }
    rep.predicted_eigenvalues = descending_unique(std::move(predicted));
  } else {
    rep.notes.push_back("eigenvalue prediction skipped above m = 12");
  }
  return rep;
}

std::vector<Gf2Element> polar_trace_elements(const Gf2Field& big) {
  if (big.degree() % 2 != 0)
    throw InvalidArgument("polar trace set needs a field of even degree");
  const int m = big.degree() / 2;
  std::vector<Gf2Element> out;
  for (uint32_t b = 1; b < big.size(); ++b) {
    const Gf2Element x{b};
    const Gf2Element xbar = big.conjugate(x);
    if (big.subfield_trace(big.add(x, xbar), m) == 1 &&
        big.subfield_trace(big.mul(x, xbar), m) == 1)
      out.push_back(x);
  }
  return out;
}

int64_t polar_trace_character_value(const Gf2Field& big, Gf2Element a) {
  if (big.degree() % 2 != 0)
    throw InvalidArgument("polar trace set needs a field of even degree");
  if (a.bits == 0 || a.bits == 1)
    throw InvalidArgument("closed form covers a not in {0, 1}");
  const int m = big.degree() / 2;
  const int tr_n = big.abs_trace(a);
  const int tr_norm = big.subfield_trace(big.mul(a, big.conjugate(a)), m);
  const int want = m % 2 == 0 ? 1 : 0;
  if (tr_n != want) return 0;
  const int64_t half = int64_t{1} << (m - 1);
  return tr_norm == 1 ? -half : half;
}

ConstructionReport polar_trace_set(int m) {
  if (m < 1 || m > 10)
    throw BudgetExceeded("polar-trace needs 1 <= m <= 10, got " + std::to_string(m));
  const Gf2Field big(2 * m);
  const auto d = polar_trace_elements(big);

  auto rep = make_report("polar-trace", {{"m", m}},
                         ConnectionSet(AbelianGroup::elementary_abelian_2(2 * m),
                                  to_group(big, d)));
  const int64_t half = int64_t{1} << (m - 1);
  rep.predicted_degree = (int64_t{1} << (2 * m - 2)) + (m % 2 ? half : 0);
  rep.predicted_eigenvalues = descending_unique(
      {rep.predicted_degree, half, 0, -half, -rep.predicted_degree});
  rep.predicted_ramanujan = true;
  rep.notes = {"five eigenvalues: +-degree, +-2^(m-1), 0"};
  return rep;
}

ConstructionReport bent_hadamard_set(int u) {
  if (u < 1 || u > 6)
    throw BudgetExceeded("bent-hadamard needs 1 <= u <= 6, got " + std::to_string(u));
  const AbelianGroup group = AbelianGroup::elementary_abelian_2(2 * u);
  std::vector<GroupElement> d;
  for (int64_t i = 1; i < group.order(); ++i) {
    const GroupElement g = group.element(i);
    int64_t dot = 0;
    for (int t = 0; t < u; ++t) dot ^= g[static_cast<size_t>(t)] & g[static_cast<size_t>(t + u)];
    if (dot) d.push_back(g);
  }

  auto rep = make_report("bent-hadamard", {{"u", u}},
                         ConnectionSet(group, std::move(d)));
  const int64_t half = int64_t{1} << (u - 1);
  rep.predicted_degree = (int64_t{1} << (2 * u - 1)) - half;
  rep.predicted_eigenvalues = descending_unique({half, -half});
  rep.predicted_ramanujan = true;
  rep.notes = {"bent function x . y on Z_2^u x Z_2^u",
               "difference set (2^{2u}, 2^{2u-1} - 2^{u-1}, 2^{2u-2} - 2^{u-1})"};
  return rep;
}

}  // namespace cayley
