#include "ldpsim/randomizers/randomized_response.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

namespace ldpsim {
namespace {

TEST(RrParamTest, MatchesTheLogisticForm) {
  for (double eps : {0.01, 0.5, 1.0, std::log(3.0), 5.0, 20.0}) {
    const double truth = 1.0 / (1.0 + std::exp(-eps));
    EXPECT_NEAR(rr_param(1, eps), truth, 1e-15);
    EXPECT_NEAR(rr_param(0, eps), 1.0 - truth, 1e-15);
  }
  EXPECT_EQ(rr_param(1, std::log(3.0)), 0.75);
  EXPECT_THROW(rr_param(2, 1.0), std::invalid_argument);
  EXPECT_THROW(rr_param(1, 0.0), std::invalid_argument);
  EXPECT_THROW(rr_param(1, -1.0), std::invalid_argument);
}

TEST(RrParamTest, LikelihoodRatiosAreBoundedByExpEpsilon) {
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> eps_dist(1e-3, 30.0);
  for (int i = 0; i < 2000; ++i) {
    const double eps = eps_dist(rng);
    const double bound = std::exp(eps) * (1 + 1e-12);
    EXPECT_NEAR(rr_param(0, eps) + rr_param(1, eps), 1.0, 1e-15);
    for (int v : {0, 1}) {
      for (int w : {0, 1}) {
        EXPECT_LE(rr_param(v, eps) / rr_param(w, eps), bound);
        // The complement is the other vote's parameter; 1 - p cancels
        // catastrophically for large eps.
        EXPECT_LE(rr_param(1 - v, eps) / rr_param(1 - w, eps), bound);
      }
    }
  }
}

TEST(DebiasTest, HandEvaluatedPoints) {
  const double ln3 = std::log(3.0);
  EXPECT_NEAR(debias(1, 4, ln3), 0.0, 1e-15);
  EXPECT_NEAR(debias(3, 4, ln3), 1.0, 1e-15);
  for (std::uint64_t n : {1u, 4u, 17u, 1000u}) {
    EXPECT_NEAR(debias(n, n, ln3), 1.5, 1e-12);
  }
  // Linear in the count with slope (e+1)/(n(e-1)).
  const double eps = 0.8, e = std::exp(eps);
  EXPECT_NEAR(debias(70, 100, eps) - debias(20, 100, eps),
              50.0 * (e + 1) / (100 * (e - 1)), 1e-12);
}

TEST(DebiasTest, IsUnbiasedInMonteCarlo) {
  std::mt19937_64 rng(8);
  const double eps = 1.0;
  const std::uint64_t n = 200;
  for (double y : {0.0, 0.3, 1.0}) {
    const auto ones = static_cast<std::uint64_t>(std::lround(y * n));
    const int trials = 4000;
    double sum = 0.0, sum2 = 0.0;
    for (int t = 0; t < trials; ++t) {
      std::uint64_t s = 0;
      for (std::uint64_t i = 0; i < n; ++i) s += rr_sample(i < ones, eps, rng).bit;
      const double est = debias(s, n, eps);
      sum += est;
      sum2 += est * est;
    }
    const double mean = sum / trials;
    const double sd = std::sqrt(sum2 / trials - mean * mean);
    EXPECT_NEAR(mean, static_cast<double>(ones) / n, 3 * sd / std::sqrt(trials))
        << "y=" << y;
  }
}

TEST(DebiasRadiusTest, FormulaAndConcentration) {
  const double eps = 1.0;
  const std::uint64_t n = 400;
  for (double beta : {0.1, 0.05}) {
    const double r = debias_radius(eps, n, beta);
    EXPECT_NEAR(r, (eps + 2) / (eps * std::sqrt(2.0)) *
                       std::sqrt(std::log(4 / beta) / n),
                1e-15);
    std::mt19937_64 rng(static_cast<std::uint64_t>(beta * 1000));
    int within = 0;
    const int trials = 1000;
    for (int t = 0; t < trials; ++t) {
      std::uint64_t s = 0;
      for (std::uint64_t i = 0; i < n; ++i) s += rr_sample(i < 120, eps, rng).bit;
      within += std::abs(debias(s, n, eps) - 0.3) <= r;
    }
    EXPECT_GE(within, (1 - beta) * trials);
  }
}

TEST(RrSampleTest, RecordsItsParameter) {
  std::mt19937_64 rng(1);
  const RRResponse r = rr_sample(1, 2.0, rng);
  EXPECT_EQ(r.bernoulli_param, rr_param(1, 2.0));
  EXPECT_TRUE(r.bit == 0 || r.bit == 1);
}

TEST(RRQueryTest, LawAndLogRatios) {
  const double eps = 0.7;
  RRQuery q(eps, std::make_shared<ScalarEqualsPredicate>(3));
  const Datum yes{Side::kAlice, make_scalar(3)}, no{Side::kBob, make_scalar(4)};
  EXPECT_EQ(q.probability_of_one(yes), rr_param(1, eps));
  EXPECT_EQ(q.probability_of_one(no), rr_param(0, eps));
  EXPECT_EQ(q.probability_of_one(sentinel_datum()), rr_param(0, eps));
  EXPECT_EQ(q.max_log_ratio(yes, no), eps);
  EXPECT_EQ(q.max_log_ratio(no, sentinel_datum()), 0.0);
  EXPECT_NEAR(bernoulli_max_log_ratio(rr_param(1, eps), rr_param(0, eps)), eps,
              1e-12);
  EXPECT_THROW(RRQuery(0.0, std::make_shared<SidePredicate>(Side::kBob)),
               std::invalid_argument);
}

TEST(PredicateTest, SentinelMatchesNothing) {
  EXPECT_FALSE(SidePredicate(Side::kAlice).evaluate(sentinel_datum()));
  EXPECT_FALSE(SidePredicate(Side::kBob).evaluate(sentinel_datum()));
  EXPECT_FALSE(ScalarEqualsPredicate(0).evaluate(sentinel_datum()));
  EXPECT_TRUE(SidePredicate(Side::kBob).evaluate(Datum{Side::kBob, make_scalar(0)}));
}

TEST(BernoulliRatioTest, DirectedRatios) {
  // log(0.5/0.25) up through outcome 1, log(0.75/0.5) down through outcome 0.
  const auto r = bernoulli_directed_log_ratios(0.5, 0.25);
  EXPECT_NEAR(r[0], std::log(2.0), 1e-15);
  EXPECT_NEAR(r[1], std::log(1.5), 1e-15);
  EXPECT_EQ(bernoulli_directed_log_ratios(0.3, 0.3)[0], 0.0);
  EXPECT_TRUE(std::isinf(bernoulli_directed_log_ratios(0.0, 0.5)[1]));
  EXPECT_TRUE(std::isinf(bernoulli_max_log_ratio(1.0, 0.5)));
}

}  // namespace
}  // namespace ldpsim
