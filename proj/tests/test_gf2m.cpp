#include <gtest/gtest.h>

#include "cayley/gf2m.hpp"

namespace cayley {
namespace {

// Carry-less product reduced bit by bit, independent of the field tables.
uint32_t reference_mul(uint32_t a, uint32_t b, uint32_t modulus, int m) {
  uint64_t r = 0;
  for (int i = 0; i < m; ++i)
    if ((b >> i) & 1) r ^= uint64_t{a} << i;
  for (int bit = 2 * m - 2; bit >= m; --bit)
    if ((r >> bit) & 1) r ^= uint64_t{modulus} << (bit - m);
  return static_cast<uint32_t>(r);
}

TEST(Gf2Field, SmallestIrreducibleModuli) {
  const uint32_t expected[] = {0x2,   0x7,   0xb,   0x13,  0x25,  0x43,
                               0x83,  0x11b, 0x203, 0x409, 0x805, 0x1009};
  for (int m = 1; m <= 12; ++m)
    EXPECT_EQ(Gf2Field::smallest_irreducible(m), expected[m - 1]) << "m=" << m;
}

TEST(Gf2Field, RejectsReducibleModulus) {
  EXPECT_THROW(Gf2Field(4, 0x15), InvalidArgument);  // (x^2+x+1)^2
  EXPECT_THROW(Gf2Field(0), InvalidArgument);
  EXPECT_THROW(Gf2Field(25), InvalidArgument);
}

TEST(Gf2Field, KnownProducts) {
  const Gf2Field f4(2);
  EXPECT_EQ(f4.mul({2}, {2}).bits, 3u);
  EXPECT_EQ(f4.mul({2}, {3}).bits, 1u);
  const Gf2Field f256(8);
  EXPECT_EQ(f256.mul({0x57}, {0x83}).bits, 0xc1u);
  EXPECT_EQ(f256.inv({0x53}).bits, 0xcau);
  EXPECT_EQ(f256.inv({0x02}).bits, 0x8du);
}

TEST(Gf2Field, TableMultiplyMatchesReference) {
  for (int m : {3, 5, 8, 11}) {
    const Gf2Field f(m);
    for (uint32_t a = 0; a < f.size(); a += (m > 8 ? 37 : 1))
      for (uint32_t b = 0; b < f.size(); b += (m > 8 ? 53 : 3))
        ASSERT_EQ(f.mul({a}, {b}).bits, reference_mul(a, b, f.modulus(), m));
  }
}

TEST(Gf2Field, LargeFieldFallback) {
  const Gf2Field f(20);
  for (uint32_t a : {1u, 2u, 12345u, 0xfffffu}) {
    EXPECT_EQ(f.mul({a}, f.one()).bits, a);
    EXPECT_EQ(f.mul({a}, f.inv({a})).bits, 1u);
    EXPECT_EQ(f.mul({a}, {0x8421}).bits, reference_mul(a, 0x8421, f.modulus(), 20));
  }
  EXPECT_THROW(f.inv(f.zero()), InvalidArgument);
}

TEST(Gf2Field, TraceIsLinearAndBalanced) {
  for (int m = 1; m <= 10; ++m) {
    const Gf2Field f(m);
    int ones = 0;
    for (uint32_t a = 0; a < f.size(); ++a) {
      Gf2Element x{a}, sum{0};
      for (int i = 0; i < m; ++i) {
        sum = f.add(sum, x);
        x = f.square(x);
      }
      ASSERT_LE(sum.bits, 1u);
      ASSERT_EQ(static_cast<int>(sum.bits), f.abs_trace({a}));
      ones += f.abs_trace({a});
    }
    EXPECT_EQ(ones, static_cast<int>(f.size() / 2));
  }
}

TEST(Gf2Field, FrobeniusAndSubfields) {
  const Gf2Field f(6);
  int in2 = 0, in3 = 0;
  for (uint32_t a = 0; a < f.size(); ++a) {
    EXPECT_EQ(f.frobenius({a}, 6).bits, a);
    in2 += f.in_subfield({a}, 2);
    in3 += f.in_subfield({a}, 3);
  }
  EXPECT_EQ(in2, 4);
  EXPECT_EQ(in3, 8);
  EXPECT_THROW(f.subfield_trace(f.primitive_element(), 3), InvalidArgument);
}

TEST(Gf2Field, PolarDecomposition) {
  for (int m : {2, 4, 6, 8}) {
    const Gf2Field f(m);
    const int half = m / 2;
    const uint64_t unit_order = (uint64_t{1} << half) + 1;
    for (uint32_t a = 1; a < f.size(); ++a) {
      const auto pd = f.polar_decompose({a});
      ASSERT_EQ(f.mul(pd.y, pd.z).bits, a);
      ASSERT_TRUE(f.in_subfield(pd.y, half));
      ASSERT_EQ(f.pow(pd.z, unit_order).bits, 1u);
    }
  }
}

TEST(Gf2Field, PrimitiveElementGeneratesGroup) {
  for (int m = 1; m <= 12; ++m) {
    const Gf2Field f(m);
    const auto g = f.primitive_element();
    Gf2Element x = g;
    uint32_t order = 1;
    while (x.bits != 1) {
      x = f.mul(x, g);
      ++order;
    }
    EXPECT_EQ(order, f.size() - 1) << "m=" << m;
  }
}

TEST(Gf2Field, GroupElementRoundTrip) {
  const Gf2Field f(7);
  const auto g = f.to_group_element({0b1000101});
  EXPECT_EQ(g, (GroupElement{1, 0, 0, 0, 1, 0, 1}));
  EXPECT_EQ(f.from_group_element(g).bits, 0b1000101u);
}

TEST(Gf2Embedding, IsAFieldHomomorphism) {
  for (auto [m, s] : {std::pair{1, 4}, {2, 3}, {3, 2}, {4, 3}}) {
    const Gf2Field small(m), big(m * s);
    const Gf2Embedding embed(small, big);
    for (uint32_t a = 0; a < small.size(); ++a)
      for (uint32_t b = 0; b < small.size(); ++b) {
        ASSERT_EQ(embed(small.mul({a}, {b})), big.mul(embed({a}), embed({b})));
        ASSERT_EQ(embed(small.add({a}, {b})), big.add(embed({a}), embed({b})));
      }
    for (uint32_t a = 0; a < small.size(); ++a)
      ASSERT_TRUE(big.in_subfield(embed({a}), m));
  }
}

}  // namespace
}  // namespace cayley
