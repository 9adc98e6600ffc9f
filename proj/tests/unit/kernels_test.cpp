#include "ldpsim/core/kernels.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "ldpsim/core/rng.hpp"

namespace ldpsim {
namespace {

TEST(KernelsTest, RespondSerialAndParallelAreBitIdentical) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (std::size_t n : {1u, 100u, 4095u, 4096u, 50000u}) {
    std::vector<UserId> users(n);
    std::iota(users.begin(), users.end(), UserId{7});
    std::shuffle(users.begin(), users.end(), rng);
    std::vector<double> p(n);
    for (double& x : p) x = u(rng);
    std::vector<std::uint8_t> a(n), b(n), c(n);
    const auto ones_a = kernels::respond_serial(users, p, 99, 4, a);
    const auto ones_b = kernels::respond_parallel(users, p, 99, 4, b);
    const auto ones_c = kernels::respond(kernels::Policy::kAuto, users, p, 99, 4, c);
    EXPECT_EQ(a, b);
    EXPECT_EQ(a, c);
    EXPECT_EQ(ones_a, ones_b);
    EXPECT_EQ(ones_a, std::accumulate(a.begin(), a.end(), std::uint64_t{0}));
    // Independent reference: the counter-based uniform thresholded at p.
    for (std::size_t i = 0; i < n; ++i) {
      ASSERT_EQ(a[i], user_uniform(99, users[i], 4) < p[i] ? 1 : 0);
    }
  }
}

TEST(KernelsTest, RespondIsOrderIndependentPerUser) {
  std::vector<UserId> users = {5, 1, 9, 3};
  std::vector<UserId> reversed(users.rbegin(), users.rend());
  std::vector<double> p(4, 0.5);
  std::vector<std::uint8_t> a(4), b(4);
  kernels::respond_serial(users, p, 1, 0, a);
  kernels::respond_serial(reversed, p, 1, 0, b);
  for (std::size_t i = 0; i < 4; ++i) EXPECT_EQ(a[i], b[3 - i]);
}

TEST(KernelsTest, AccumulateSerialAndParallelAreBitIdentical) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(0.0, 2.0);
  const std::size_t n = 30000;
  std::vector<UserId> users(n);
  std::iota(users.begin(), users.end(), UserId{0});
  std::shuffle(users.begin(), users.end(), rng);
  std::vector<double> totals_a(n, 0.25), totals_b(n, 0.25);
  for (int round = 0; round < 3; ++round) {
    std::vector<double> c(n);
    for (double& x : c) x = u(rng);
    kernels::accumulate_serial(users, c, totals_a);
    kernels::accumulate_parallel(users, c, totals_b);
  }
  EXPECT_EQ(totals_a, totals_b);
}

}  // namespace
}  // namespace ldpsim
