#include "ldpsim/problems/pointer_chasing.hpp"

#include <gtest/gtest.h>

#include <cmath>

namespace ldpsim {
namespace {

PCInstance make(std::uint32_t k, std::vector<std::uint32_t> a,
                std::vector<std::uint32_t> b) {
  PCInstance p;
  p.k = k;
  p.l = static_cast<std::uint32_t>(a.size());
  p.a = std::move(a);
  p.b = std::move(b);
  return p;
}

// Chain written out independently: odd steps read b, even steps read a.
std::uint32_t chain(const PCInstance& p) {
  std::uint32_t v = p.a[0];
  for (std::uint32_t i = 1; i <= p.k; ++i) v = (i % 2 ? p.b : p.a)[v - 1];
  return v;
}

TEST(ChaseOracleTest, HandTrace) {
  EXPECT_EQ(chase_oracle(make(2, {2, 3, 1}, {3, 1, 2})), 2u);
}

TEST(ChaseOracleTest, EightPointerFixture) {
  const PCInstance fig = make(5, {8, 6, 5, 1, 2, 4, 3, 7}, {1, 2, 4, 6, 7, 8, 3, 5});
  EXPECT_EQ(chase_oracle(fig), 8u);
}

TEST(ChaseOracleTest, FixedPoint) {
  for (std::uint32_t k = 1; k < 6; ++k) {
    EXPECT_EQ(chase_oracle(make(k, {1, 1, 1, 1}, {1, 1, 1, 1})), 1u);
  }
}

TEST(ChaseOracleTest, AlternatesTablesAndMatchesIndependentChain) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    PCInstance p = gen_pc_instance(1 + seed % 7, 2 + seed % 15, seed);
    EXPECT_EQ(chase_oracle(p), chain(p));
    const std::uint32_t vk = chase_oracle(p);
    p.k += 1;
    EXPECT_EQ(chase_oracle(p), (p.k % 2 ? p.b : p.a)[vk - 1]);
  }
}

TEST(GenPcInstanceTest, RangeDeterminismAndErrors) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const PCInstance p = gen_pc_instance(3, 2, seed);
    for (auto v : p.a) EXPECT_TRUE(v == 1 || v == 2);
    for (auto v : p.b) EXPECT_TRUE(v == 1 || v == 2);
    EXPECT_NO_THROW(p.validate());
  }
  const PCInstance x = gen_pc_instance(3, 16, 9), y = gen_pc_instance(3, 16, 9);
  EXPECT_EQ(x.a, y.a);
  EXPECT_EQ(x.b, y.b);
  EXPECT_NE(x.a, gen_pc_instance(3, 16, 10).a);
  EXPECT_THROW(gen_pc_instance(0, 4, 1), std::invalid_argument);
  EXPECT_THROW(gen_pc_instance(1, 1, 1), std::invalid_argument);
  PCInstance bad = make(1, {1, 3}, {1, 1});
  EXPECT_THROW(bad.validate(), std::invalid_argument);
  bad = make(1, {1, 2}, {1});
  EXPECT_THROW(bad.validate(), std::invalid_argument);
}

TEST(PointerWidthTest, CeilLog2) {
  for (std::uint32_t l = 2; l < 300; ++l) {
    EXPECT_EQ(pointer_width(l), static_cast<std::uint32_t>(std::ceil(std::log2(l))))
        << l;
  }
}

TEST(RegimeTest, FlagsLargeK) {
  EXPECT_TRUE(pc_recommended_regime(3, 16));
  EXPECT_FALSE(pc_recommended_regime(4, 16));
  EXPECT_FALSE(pc_recommended_regime(5, 8));
  EXPECT_TRUE(pc_recommended_regime(2, 8));
}

TEST(PcBitPredicateTest, ReadsBigEndianCodeOfValueMinusOne) {
  const PCInstance p = make(1, {6, 1, 8, 3, 2, 4, 5, 7}, {2, 2, 2, 2, 2, 2, 2, 2});
  const Datum alice{Side::kAlice, p.alice_payload()};
  const Datum bob{Side::kBob, p.bob_payload()};
  // a[1] = 6, code 5 = 101.
  EXPECT_TRUE(PcBitPredicate(Side::kAlice, 1, 0, 3).evaluate(alice));
  EXPECT_FALSE(PcBitPredicate(Side::kAlice, 1, 1, 3).evaluate(alice));
  EXPECT_TRUE(PcBitPredicate(Side::kAlice, 1, 2, 3).evaluate(alice));
  // Wrong side never matches.
  EXPECT_FALSE(PcBitPredicate(Side::kAlice, 1, 0, 3).evaluate(bob));
  EXPECT_FALSE(PcBitPredicate(Side::kBob, 1, 0, 3).evaluate(alice));
  // b[1] = 2, code 1 = 001.
  EXPECT_TRUE(PcBitPredicate(Side::kBob, 1, 2, 3).evaluate(bob));
  EXPECT_FALSE(PcBitPredicate(Side::kBob, 1, 0, 3).evaluate(sentinel_datum()));
}

}  // namespace
}  // namespace ldpsim
