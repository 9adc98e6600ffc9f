#include "ldpsim/twoparty/families.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <set>
#include <sstream>

namespace ldpsim {
namespace {

TEST(FamiliesTest, LiftFamilyCount) {
  // Depth <= 2 trees: each of the 3 nodes is absent or one of 8 choices,
  // children only under a present root: 1 + 8 * 9 * 9.
  const std::uint64_t depth2 = 1 + 8 * 9 * 9;
  EXPECT_EQ(depth2, 649u);
  EXPECT_EQ(lift_family_size(), depth2 + 8 * (1u << 14));
  std::uint64_t seen = 0;
  std::set<std::string> distinct;
  for_each_lift_protocol(ChannelSpec::noiseless(), [&](const TreeProtocol& t) {
    ++seen;
    EXPECT_TRUE(t.deterministic());
    if (seen <= 2000) {
      std::ostringstream s;
      write_tree_protocol(s, t);
      distinct.insert(s.str());
    }
  });
  EXPECT_EQ(seen, lift_family_size());
  EXPECT_EQ(distinct.size(), 2000u);
}

TEST(FamiliesTest, SimultaneousFamilyCount) {
  EXPECT_EQ(simultaneous_family_size(), 4u * 4u * 256u * 256u);
  std::uint64_t seen = 0;
  for_each_simultaneous_protocol([&](const SimultaneousProtocol& p) {
    ++seen;
    EXPECT_EQ(p.rounds(), 2u);
  });
  EXPECT_EQ(seen, simultaneous_family_size());
}

TEST(FamiliesTest, LowerFixturesRespectTheBudget) {
  const double eps = std::log(2.0);
  const auto fixtures = lower_fixtures(eps);
  EXPECT_EQ(fixtures.size(), 252u);
  for (const auto& q : fixtures) {
    EXPECT_EQ(q.epsilon, eps);
    EXPECT_EQ(q.universe.size(), 4u);
    ASSERT_NE(q.driver, nullptr);
  }
}

}  // namespace
}  // namespace ldpsim
