#include "ldpsim/twoparty/channel.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

namespace ldpsim {
namespace {

// P[Bin(m, p) > m/2] by direct summation.
double majority_oracle(double p, int m) {
  double total = 0.0;
  for (int j = m / 2 + 1; j <= m; ++j) {
    double c = 1.0;
    for (int i = 0; i < j; ++i) c = c * (m - i) / (i + 1);
    total += c * std::pow(p, j) * std::pow(1 - p, m - j);
  }
  return total;
}

TEST(ChannelTest, ExactCrossoversAtLnThree) {
  EXPECT_EQ(lift_crossover(std::log(3.0)), 0.125);
  EXPECT_EQ(lower_crossover(std::log(3.0)), 0.25);
  EXPECT_EQ(majority_amplify(ChannelSpec::bsc(0.25), 3).crossover, 10.0 / 64.0);
}

TEST(ChannelTest, CrossoverFormulas) {
  for (double eps : {0.1, 0.5, 1.0, 2.0, 5.0}) {
    const double e = std::exp(eps);
    EXPECT_NEAR(lift_crossover(eps), (e - 1) / (4 * (e + 1)), 1e-15);
    EXPECT_NEAR(lower_crossover(eps), 2 * lift_crossover(eps), 1e-15);
    EXPECT_LT(lower_crossover(eps), 0.5);
  }
}

TEST(ChannelTest, SpecConstructionAndValidation) {
  const ChannelSpec c = ChannelSpec::bsc_with_advantage(0.125);
  EXPECT_EQ(c.kind, ChannelKind::kBsc);
  EXPECT_EQ(c.crossover, 0.375);
  EXPECT_EQ(c.advantage(), 0.125);
  EXPECT_EQ(ChannelSpec::noiseless().flip_probability(), 0.0);
  EXPECT_THROW(ChannelSpec::bsc(0.5), std::invalid_argument);
  EXPECT_THROW(ChannelSpec::bsc(-0.1), std::invalid_argument);
  EXPECT_NO_THROW(ChannelSpec::bsc(0.0));
}

TEST(ChannelTest, MajorityMatchesBinomialTail) {
  for (double p : {0.05, 0.25, 0.4, 0.49}) {
    for (int m : {1, 3, 5, 11, 31}) {
      const ChannelSpec out = majority_amplify(ChannelSpec::bsc(p), m);
      EXPECT_NEAR(out.crossover, majority_oracle(p, m), 1e-13) << p << " " << m;
      EXPECT_LE(out.crossover, p + 1e-15);
    }
  }
  EXPECT_THROW(majority_amplify(ChannelSpec::bsc(0.25), 4), std::invalid_argument);
  EXPECT_THROW(majority_amplify(ChannelSpec::noiseless(), 3), std::invalid_argument);
}

TEST(ChannelTest, TransmitFlipRateAndFeedback) {
  std::mt19937_64 rng(99);
  const ChannelSpec c = ChannelSpec::bsc(0.3);
  const int n = 40000;
  int flips = 0;
  for (int i = 0; i < n; ++i) {
    const std::uint8_t bit = i & 1;
    const Transmission t = bsc_transmit(bit, c, rng);
    EXPECT_EQ(t.feedback, t.received);
    flips += t.received != bit;
  }
  const double sd = std::sqrt(0.3 * 0.7 / n);
  EXPECT_NEAR(static_cast<double>(flips) / n, 0.3, 3 * sd);
  EXPECT_THROW(bsc_transmit(0, ChannelSpec::noiseless(), rng), std::invalid_argument);
}

TEST(ChannelTest, MajorityChannelEmpiricalRate) {
  std::mt19937_64 rng(5);
  const MajorityChannel ch(ChannelSpec::bsc(0.25), 3);
  EXPECT_EQ(ch.repetitions(), 3u);
  const int n = 40000;
  int flips = 0;
  for (int i = 0; i < n; ++i) flips += ch.transmit(1, rng).received != 1;
  const double p = 10.0 / 64.0;
  EXPECT_NEAR(static_cast<double>(flips) / n, p, 3 * std::sqrt(p * (1 - p) / n));
}

}  // namespace
}  // namespace ldpsim
