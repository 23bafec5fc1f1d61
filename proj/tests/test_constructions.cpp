#include <gtest/gtest.h>

#include <set>

#include "cayley/constructions.hpp"
#include "cayley/group_ring.hpp"
#include "cayley/kloosterman.hpp"

namespace cayley {
namespace {

std::vector<std::pair<double, int64_t>> pairs(const Spectrum& s) {
  std::vector<std::pair<double, int64_t>> out;
  for (const auto& e : s.entries()) out.emplace_back(e.value, e.multiplicity);
  return out;
}
using P = std::vector<std::pair<double, int64_t>>;

TEST(Theorem33, SmallestCase) {
  auto rep = theorem33_set(4, 4);
  const std::vector<GroupElement> expected{{2, 0}, {0, 2}, {1, 2}, {2, 1}, {3, 2}, {2, 3}};
  EXPECT_EQ(std::vector<GroupElement>(rep.connection.elements().begin(),
                                      rep.connection.elements().end()),
            normalize_set(expected));
  const auto cert = certify(rep);
  EXPECT_EQ(pairs(cert.spectrum), (P{{6, 1}, {2, 6}, {-2, 9}}));
  EXPECT_TRUE(cert.verdict.is_ramanujan);
  EXPECT_TRUE(rep.discrepancies.empty());
}

TEST(Theorem33, FourBySix) {
  auto rep = theorem33_set(4, 6);
  EXPECT_EQ(rep.connection.size(), 10);
  const auto cert = certify(rep);
  EXPECT_EQ(cert.spectrum.multiplicity_of(-4), 1);
  EXPECT_TRUE(cert.verdict.is_ramanujan);
  EXPECT_TRUE(rep.discrepancies.empty());
}

TEST(Theorem33, SixBySixContradictsCriterion) {
  auto rep = theorem33_set(6, 6);
  EXPECT_EQ(rep.connection.size(), 16);
  EXPECT_TRUE(theorem33_condition(6, 6));
  const auto cert = certify(rep);
  EXPECT_EQ(cert.spectrum.multiplicity_of(-8), 1);
  EXPECT_FALSE(cert.verdict.is_ramanujan);
  EXPECT_TRUE(rep.has_discrepancy(DiscrepancyKind::kClaimContradicted));
  EXPECT_FALSE(rep.has_discrepancy(DiscrepancyKind::kSpectrumOutsidePrediction));
}

TEST(Theorem33, Condition) {
  EXPECT_TRUE(theorem33_condition(4, 4));
  EXPECT_FALSE(theorem33_condition(4, 12));
  EXPECT_FALSE(theorem33_hypothesis(4, 12));
  EXPECT_TRUE(theorem33_hypothesis(4, 6));
}

TEST(Theorem33, Preconditions) {
  EXPECT_THROW(theorem33_set(2, 4), InvalidArgument);
  EXPECT_THROW(theorem33_set(4, 7), InvalidArgument);
  EXPECT_THROW(theorem33_case_value(4, 4, 9), InvalidArgument);
}

TEST(Theorem33, EveryCharacterClassMatchesClosedForm) {
  for (int64_t s = 4; s <= 12; s += 2)
    for (int64_t r = 4; r <= 12; r += 2) {
      const auto rep = theorem33_set(s, r);
      const auto& g = rep.connection.group();
      std::set<int> seen;
      for (int64_t i = 0; i < g.order(); ++i) {
        const auto a = g.character(i);
        const int c = theorem33_case(s, r, a[0], a[1]);
        seen.insert(c);
        const double v = g.character_sum(a, rep.connection.elements()).real();
        ASSERT_NEAR(v, static_cast<double>(theorem33_case_value(s, r, c)), 1e-9)
            << "s=" << s << " r=" << r << " a=(" << a[0] << "," << a[1] << ")";
      }
      EXPECT_EQ(seen.size(), 9u);
    }
  EXPECT_EQ(theorem33_case_value(4, 4, 5), -2);
}

TEST(KloostermanTrace, SmallFields) {
  auto m1 = kloosterman_trace_set(1);
  EXPECT_EQ(m1.connection.size(), 1);
  EXPECT_EQ(m1.connection.group().order(), 2);

  auto m2 = kloosterman_trace_set(2);
  EXPECT_EQ(m2.predicted_degree, 2);
  const std::vector<GroupElement> omega{{1, 0}, {1, 1}};  // x and x + 1
  EXPECT_EQ(std::vector<GroupElement>(m2.connection.elements().begin(),
                                      m2.connection.elements().end()),
            omega);

  auto m5 = kloosterman_trace_set(5);
  EXPECT_EQ(m5.connection.size(), 11);
  const auto cert = certify(m5);
  EXPECT_TRUE(cert.stats.bipartite);
  EXPECT_TRUE(cert.verdict.is_ramanujan);
  EXPECT_FALSE(m5.has_discrepancy(DiscrepancyKind::kSpectrumOutsidePrediction));
}

TEST(KloostermanTrace, DegreeFormulaAllBudget) {
  for (int m = 1; m <= 14; ++m) {
    const auto rep = kloosterman_trace_set(m);
    EXPECT_EQ(rep.connection.size(), rep.predicted_degree) << m;
  }
}

TEST(KloostermanTrace, EigenvalueFormula) {
  for (int m = 2; m <= 10; ++m) {
    const Gf2Field f(m);
    const auto d = dij_elements(f, 1, 1);
    const auto table = KloostermanTable::compute(f);
    for (uint32_t a = 2; a < f.size(); ++a)
      ASSERT_EQ(4 * field_character_sum(f, {a}, d), -table.at({a}) + table.at({a ^ 1u}))
          << "m=" << m << " a=" << a;
    for (auto z : d) ASSERT_EQ(f.abs_trace(z), 1);
  }
}

TEST(Dij, CardinalityMatchesEnumeration) {
  for (int m = 2; m <= 12; ++m)
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        EXPECT_EQ(static_cast<int64_t>(dij_set(m, i, j).size()), dij_cardinality(m, i, j))
            << m << i << j;
  EXPECT_EQ(dij_cardinality(3, 0, 0), 0);
  EXPECT_EQ(dij_cardinality(3, 1, 0), 3);
  EXPECT_EQ(dij_cardinality(3, 0, 1), 3);
  EXPECT_EQ(dij_cardinality(8, 0, 0), 71);
  EXPECT_THROW(dij_cardinality(1, 0, 0), InvalidArgument);
  EXPECT_EQ(dij_set(1, 1, 1).size(), 1u);
  const auto m6 = kloosterman_trace_set(6);
  EXPECT_EQ(dij_set(6, 1, 1), std::vector<GroupElement>(m6.connection.elements().begin(),
                                                        m6.connection.elements().end()));
}

TEST(PolarTrace, ExampleSpectrum) {
  auto rep = polar_trace_set(2);
  const auto cert = certify(rep);
  EXPECT_EQ(pairs(cert.spectrum), (P{{4, 1}, {2, 4}, {0, 6}, {-2, 4}, {-4, 1}}));
  EXPECT_TRUE(cert.stats.bipartite);
  EXPECT_EQ(cert.stats.diameter, 4);
  EXPECT_TRUE(cert.verdict.is_ramanujan);
  EXPECT_TRUE(rep.discrepancies.empty());
}

TEST(PolarTrace, DegreesAndSpectra) {
  const int64_t degrees[] = {2, 4, 20, 64, 272};
  for (int m = 1; m <= 5; ++m) {
    auto rep = polar_trace_set(m);
    EXPECT_EQ(rep.connection.size(), degrees[m - 1]);
    const auto cert = certify(rep);
    EXPECT_TRUE(rep.discrepancies.empty()) << m;
    EXPECT_TRUE(cert.stats.connected());
    EXPECT_TRUE(cert.stats.bipartite);
  }
}

TEST(PolarTrace, FourWayCaseTable) {
  for (int m = 1; m <= 5; ++m) {
    const Gf2Field big(2 * m);
    const auto d = polar_trace_elements(big);
    for (uint32_t a = 2; a < big.size(); ++a)
      ASSERT_EQ(field_character_sum(big, {a}, d), polar_trace_character_value(big, {a}))
          << "m=" << m << " a=" << a;
  }
  EXPECT_THROW(polar_trace_character_value(Gf2Field(4), {1}), InvalidArgument);
}

TEST(BentHadamard, DifferenceSets) {
  for (int u = 1; u <= 4; ++u) {
    auto rep = bent_hadamard_set(u);
    const int64_t n = int64_t{1} << (2 * u);
    const int64_t k = (n / 2) - (int64_t{1} << (u - 1));
    const int64_t lambda = (n / 4) - (int64_t{1} << (u - 1));
    const auto ds = verify_difference_set(rep.connection.group(), rep.connection.elements());
    ASSERT_TRUE(ds);
    EXPECT_EQ(*ds, (DifferenceSetParams{n, k, lambda}));
    const auto cert = certify(rep);
    EXPECT_FALSE(rep.has_discrepancy(DiscrepancyKind::kSpectrumOutsidePrediction));
    EXPECT_EQ(cert.verdict.is_ramanujan, u >= 2) << u;
  }
  EXPECT_THROW(bent_hadamard_set(7), BudgetExceeded);
}

TEST(ConstructionReport, OutsidePredictionIsReported) {
  auto rep = theorem33_set(4, 4);
  rep.predicted_eigenvalues = {2};
  certify(rep);
  EXPECT_TRUE(rep.has_discrepancy(DiscrepancyKind::kSpectrumOutsidePrediction));
  rep = theorem33_set(4, 4);
  rep.predicted_degree = 7;
  certify(rep);
  EXPECT_TRUE(rep.has_discrepancy(DiscrepancyKind::kDegreeMismatch));
}

}  // namespace
}  // namespace cayley
