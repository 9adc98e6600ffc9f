#include "ldpsim/solvers/sizing.hpp"

#include <gtest/gtest.h>

#include <cmath>

namespace ldpsim {
namespace {

double c2(double eps) {
  const double c = (eps + 2) / (eps * std::sqrt(2.0));
  return c * c;
}

std::uint64_t hl_oracle(double eps, std::uint32_t b, double beta) {
  const double e = eps / 2;
  const double first =
      100 * c2(e) * (2 * std::ceil(std::log2(b)) + 2 + std::log(1 / beta));
  const double second = 25 * std::log(4 / beta);
  // Smallest integer strictly above both.
  return static_cast<std::uint64_t>(std::floor(std::max(first, second))) + 1;
}

TEST(SizingTest, HiddenLayersBound) {
  EXPECT_EQ(hl_sample_bound(1.0, 4, 0.1), 10379u);
  for (double eps : {0.5, 1.0, 2.0, 8.0}) {
    for (std::uint32_t b : {1u, 2u, 3u, 4u, 16u}) {
      EXPECT_EQ(hl_sample_bound(eps, b, 0.1), hl_oracle(eps, b, 0.1));
      EXPECT_EQ(hl_sample_bound(eps, b, 0.05), hl_oracle(eps, b, 0.05));
    }
  }
  EXPECT_GT(static_cast<double>(hl_sample_bound(1.0, 4, 0.1)), 25 * std::log(40.0));
}

TEST(SizingTest, PointerChasingBound) {
  // ln((k+1) ceil(log2 l)) + ln 12 at beta = 1/6.
  const double want = std::ceil(100 * c2(1.0) * (std::log(4.0 * 4.0) + std::log(12.0)));
  EXPECT_EQ(pc_group_bound(1.0, 3, 16, 1.0 / 6.0), static_cast<std::uint64_t>(want));
  EXPECT_EQ(pc_group_bound(1.0, 3, 16, 1.0 / 6.0), 2366u);
  // Monotone in eps and in the number of bit queries.
  EXPECT_GT(pc_group_bound(0.5, 3, 16, 1.0 / 6.0), pc_group_bound(1.0, 3, 16, 1.0 / 6.0));
  EXPECT_GT(pc_group_bound(1.0, 7, 16, 1.0 / 6.0), pc_group_bound(1.0, 3, 16, 1.0 / 6.0));
}

}  // namespace
}  // namespace ldpsim
