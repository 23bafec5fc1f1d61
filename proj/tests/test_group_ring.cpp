#include <gtest/gtest.h>

#include <set>

#include "cayley/group_ring.hpp"

namespace cayley {
namespace {

std::vector<GroupElement> residues(std::initializer_list<int64_t> xs) {
  std::vector<GroupElement> out;
  for (int64_t x : xs) out.push_back(GroupElement{x});
  return out;
}

// c(x) c(x^{-1}) mod x^n - 1 as a plain polynomial product.
std::vector<int64_t> hall_product(int n, const std::vector<int>& c) {
  std::vector<int64_t> a(static_cast<size_t>(n), 0), b(static_cast<size_t>(n), 0),
      prod(static_cast<size_t>(n), 0);
  for (int x : c) {
    a[static_cast<size_t>(x)] = 1;
    b[static_cast<size_t>((n - x) % n)] = 1;
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      prod[static_cast<size_t>((i + j) % n)] += a[static_cast<size_t>(i)] * b[static_cast<size_t>(j)];
  return prod;
}

TEST(GroupRing, DifferenceCountsMatchHallProduct) {
  const auto g = AbelianGroup::cyclic(20);
  for (const auto& c : {std::vector<int>{4, 8, 12, 16}, std::vector<int>{3, 4, 8, 12, 16, 17},
                        std::vector<int>{1, 3, 4, 7, 8, 9, 11, 12, 13, 16, 17, 19},
                        std::vector<int>{0, 1, 5, 11}}) {
    std::vector<GroupElement> elems;
    for (int x : c) elems.push_back(GroupElement{x});
    EXPECT_EQ(difference_counts(g, elems).counts, hall_product(20, c));
  }
}

TEST(GroupRing, ExampleCertificate) {
  const auto g = AbelianGroup::cyclic(20);
  const auto cert = verify_gds(g, residues({4, 8, 12, 16}));
  ASSERT_TRUE(cert);
  EXPECT_EQ(cert->n, 20);
  EXPECT_EQ(cert->s_size(), 16);
  EXPECT_EQ(cert->k, 4);
  EXPECT_EQ(cert->mu1, 0);
  EXPECT_EQ(cert->mu2, 3);
  EXPECT_TRUE(cert->identity_in_s);
  EXPECT_TRUE(group_ring_identity_holds(g, difference_counts(g, cert->c), *cert));
}

TEST(GroupRing, DifferenceSets) {
  EXPECT_EQ(verify_difference_set(AbelianGroup::cyclic(7), residues({1, 2, 4})),
            (DifferenceSetParams{7, 3, 1}));
  EXPECT_EQ(verify_difference_set(AbelianGroup::cyclic(4), residues({1, 2, 3})),
            (DifferenceSetParams{4, 3, 2}));
  EXPECT_EQ(verify_difference_set(AbelianGroup::cyclic(13), residues({0, 1, 3, 9})),
            (DifferenceSetParams{13, 4, 1}));
  EXPECT_FALSE(verify_difference_set(AbelianGroup::cyclic(20), residues({4, 8, 12, 16})));
  const AbelianGroup z44({4, 4});
  const std::vector<GroupElement> d{{2, 0}, {0, 2}, {1, 2}, {2, 1}, {3, 2}, {2, 3}};
  EXPECT_EQ(verify_difference_set(z44, d), (DifferenceSetParams{16, 6, 2}));
}

TEST(GroupRing, MoreThanTwoValuesIsNotGds) {
  // Nonidentity counts of {0,1,2,4} in Z_10 take the values 0, 1 and 2.
  EXPECT_FALSE(verify_gds(AbelianGroup::cyclic(10), residues({0, 1, 2, 4})).has_value());
  EXPECT_TRUE(verify_gds(AbelianGroup::cyclic(9), residues({0, 1, 2, 5})).has_value());
}

TEST(GroupRing, Preconditions) {
  const auto g = AbelianGroup::cyclic(4);
  EXPECT_THROW(verify_gds(g, std::vector<GroupElement>{}), InvalidArgument);
  EXPECT_THROW(verify_gds(g, residues({0, 1, 2, 3})), InvalidArgument);
}

TEST(GroupRing, MinusOneMultiplier) {
  const auto z7 = AbelianGroup::cyclic(7);
  EXPECT_FALSE(has_multiplier_minus_one(z7, residues({1, 2, 4})));
  EXPECT_EQ(minus_one_multiplier_shift(z7, residues({1, 2, 3})), (GroupElement{3}));
  const auto z20 = AbelianGroup::cyclic(20);
  EXPECT_EQ(minus_one_multiplier_shift(
                z20, residues({1, 3, 4, 7, 8, 9, 11, 12, 13, 16, 17, 19})),
            (GroupElement{0}));
}

TEST(CyclicMask, NegateAndRotate) {
  EXPECT_EQ(cyclic_mask::rotate(0b0011, 4, 1), 0b0110u);
  EXPECT_EQ(cyclic_mask::rotate(0b1001, 4, 1), 0b0011u);
  EXPECT_EQ(cyclic_mask::negate(0b0010, 5), 0b10000u);
  EXPECT_EQ(cyclic_mask::negate(0b0111, 5), 0b11001u);
  for (int n : {2, 7, 20, 24})
    for (uint64_t m = 1; m < 200; m += 7) {
      const uint64_t mask = m & ((uint64_t{1} << n) - 1);
      uint64_t expect = 0;
      for (int i = 0; i < n; ++i)
        if ((mask >> i) & 1) expect |= uint64_t{1} << ((n - i) % n);
      ASSERT_EQ(cyclic_mask::negate(mask, n), expect);
    }
}

// Independent count: verify every subset directly.
uint64_t brute_gds_count(int n, bool canonical) {
  const auto g = AbelianGroup::cyclic(n);
  uint64_t count = 0;
  for (uint64_t s = 1; s + 1 < (uint64_t{1} << n); ++s) {
    if (std::popcount(s) < 2) continue;
    if (canonical && cyclic_mask::orbit_minimum(s, n) != s) continue;
    if (verify_gds(g, cyclic_mask::to_elements(s, n))) ++count;
  }
  return count;
}

TEST(SearchGds, FrozenExpandedCounts) {
  auto count = [](int n) { return search_gds(n, [](const GdsSearchHit&) {}); };
  EXPECT_EQ(count(8), 162u);
  EXPECT_EQ(count(12), 952u);
  EXPECT_EQ(count(16), 3594u);
}

TEST(SearchGds, MatchesBruteForce) {
  for (int n = 3; n <= 11; ++n) {
    EXPECT_EQ(search_gds(n, [](const GdsSearchHit&) {}), brute_gds_count(n, false)) << n;
    EXPECT_EQ(search_gds(n, [](const GdsSearchHit&) {}, {.canonical_only = true}),
              brute_gds_count(n, true))
        << n;
  }
}

TEST(SearchGds, HitsCarryValidCertificates) {
  const auto g = AbelianGroup::cyclic(20);
  bool found = false;
  uint64_t last = 0;
  search_gds(20, [&](const GdsSearchHit& hit) {
    EXPECT_GT(hit.encoding, last);
    last = hit.encoding;
    if (hit.encoding % 97 == 0 || hit.encoding == 0x11110) {
      const auto fresh = verify_gds(g, hit.certificate.c);
      ASSERT_TRUE(fresh);
      EXPECT_EQ(fresh->mu1, hit.certificate.mu1);
      EXPECT_EQ(fresh->mu2, hit.certificate.mu2);
      EXPECT_EQ(fresh->s, hit.certificate.s);
      EXPECT_TRUE(group_ring_identity_holds(g, difference_counts(g, hit.certificate.c),
                                            hit.certificate));
    }
    if (hit.encoding == 0x11110) found = true;
  });
  EXPECT_TRUE(found);
  EXPECT_THROW(search_gds(25, [](const GdsSearchHit&) {}), BudgetExceeded);
}

}  // namespace
}  // namespace cayley
