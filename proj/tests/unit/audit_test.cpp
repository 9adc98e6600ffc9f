#include "ldpsim/randomizers/audit.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <sstream>

#include "ldpsim/core/engine.hpp"
#include "ldpsim/core/errors.hpp"
#include "ldpsim/core/population.hpp"
#include "ldpsim/randomizers/randomized_response.hpp"
#include "test_util.hpp"

namespace ldpsim {
namespace {

// Enumerates all 2^q output realizations and takes the worst absolute log
// likelihood ratio directly.
double brute_force_loss(const std::vector<std::pair<double, double>>& laws) {
  double worst = 0.0;
  const std::size_t q = laws.size();
  for (std::uint64_t y = 0; y < (1ULL << q); ++y) {
    double lp = 0.0, lq = 0.0;
    for (std::size_t i = 0; i < q; ++i) {
      const bool one = (y >> i) & 1;
      lp += std::log(one ? laws[i].first : 1 - laws[i].first);
      lq += std::log(one ? laws[i].second : 1 - laws[i].second);
    }
    worst = std::max(worst, std::abs(lp - lq));
  }
  return worst;
}

TEST(AuditUserTest, MatchesBruteForceOnRandomLaws) {
  std::mt19937_64 rng(21);
  std::uniform_real_distribution<double> u(0.05, 0.95);
  const Datum x{Side::kAlice, make_scalar(0)}, y{Side::kBob, make_scalar(1)};
  for (int trial = 0; trial < 300; ++trial) {
    const int q = 1 + trial % 6;
    std::vector<RandomizerPtr> owned;
    std::vector<UserResponse> responses;
    std::vector<std::pair<double, double>> laws;
    for (int i = 0; i < q; ++i) {
      const double a = u(rng), b = u(rng);
      owned.push_back(std::make_shared<LawRandomizer>(
          10.0, [a, b](const Datum& d) { return d.side == Side::kAlice ? a : b; },
          "law"));
      responses.push_back({owned.back().get(), static_cast<std::uint8_t>(i & 1)});
      laws.emplace_back(a, b);
    }
    const Datum neighbors[] = {y};
    EXPECT_NEAR(audit_user(responses, x, neighbors), brute_force_loss(laws), 1e-12);
  }
}

TEST(AuditUserTest, RandomizedResponseCountsDifferingQueries) {
  const double eps = 0.5;
  auto alice = std::make_shared<RRQuery>(eps, std::make_shared<SidePredicate>(Side::kAlice));
  auto bob = std::make_shared<RRQuery>(eps, std::make_shared<SidePredicate>(Side::kBob));
  auto one = std::make_shared<RRQuery>(eps, std::make_shared<ScalarEqualsPredicate>(1));
  const Datum x{Side::kAlice, make_scalar(0)}, y{Side::kBob, make_scalar(0)};
  const Datum neighbors[] = {y, sentinel_datum()};
  const std::vector<UserResponse> two = {{alice.get(), 1}, {bob.get(), 0}};
  EXPECT_NEAR(audit_user(two, x, neighbors), 2 * eps, 1e-15);
  // scalar-eq(1) agrees on x, y and the sentinel.
  const std::vector<UserResponse> none = {{one.get(), 1}, {one.get(), 0}};
  EXPECT_EQ(audit_user(none, x, neighbors), 0.0);
  const std::vector<UserResponse> missing = {{nullptr, 1}};
  EXPECT_THROW(audit_user(missing, x, neighbors), AuditError);
}

TEST(AuditTranscriptTest, PerUserTotalsAndSentinel) {
  const double eps = 0.4;
  auto eq1 = std::make_shared<RRQuery>(eps, std::make_shared<ScalarEqualsPredicate>(1));
  auto c = std::make_shared<ConstantRandomizer>(0.2, eps);
  // Users 0..2 answer eq1 in round 0; user 0 answers it again in round 1;
  // user 3 only answers the constant law.
  testing::ScriptedDriver d({RoundRequest{{0, 1, 2}, {eq1}},
                             RoundRequest{{0, 3}, {eq1, c}}});
  // Both payloads are 1, so only the sentinel separates them.
  const Population p = sample_population(5, make_scalar(1), make_scalar(1), 3);
  const Execution ex = execute(d, p, InteractivityMode::kFull, 1);
  const AuditReport with = audit_transcript(ex.transcript, p, ex.query_log);
  ASSERT_EQ(with.per_user.size(), 4u);
  EXPECT_NEAR(with.find(0)->max_log_ratio, 2 * eps, 1e-15);
  EXPECT_NEAR(with.find(1)->max_log_ratio, eps, 1e-15);
  EXPECT_EQ(with.find(3)->max_log_ratio, 0.0);
  EXPECT_EQ(with.find(4), nullptr);
  EXPECT_EQ(*with.worst_user, 0u);
  AuditOptions no_sentinel;
  no_sentinel.include_sentinel = false;
  EXPECT_EQ(audit_transcript(ex.transcript, p, ex.query_log, no_sentinel)
                .max_log_ratio(),
            0.0);
  AuditOptions serial;
  serial.kernel_policy = kernels::Policy::kSerial;
  const AuditReport s = audit_transcript(ex.transcript, p, ex.query_log, serial);
  for (std::size_t i = 0; i < s.per_user.size(); ++i) {
    EXPECT_EQ(s.per_user[i].max_log_ratio, with.per_user[i].max_log_ratio);
  }
  std::ostringstream out;
  write_audit_report(out, with, 0.5);
  EXPECT_NE(out.str().find("0\t0.80000000000000004\t0.5\tfail"), std::string::npos)
      << out.str();
  EXPECT_NE(out.str().find("1\t0.40000000000000002\t0.5\tpass"), std::string::npos);
}

TEST(AuditTranscriptTest, EmptyTranscriptGivesEmptyReport) {
  const Population p = sample_population(3, make_scalar(0), make_scalar(1), 3);
  const AuditReport r = audit_transcript(Transcript{}, p, QueryLog{});
  EXPECT_TRUE(r.per_user.empty());
  EXPECT_FALSE(r.worst_user.has_value());
  EXPECT_EQ(r.max_log_ratio(), 0.0);
}

TEST(AuditTranscriptTest, MissingLogEntryIsAnError) {
  Transcript t;
  RoundRecord r;
  r.round_index = 0;
  r.users = {0};
  r.randomizer_ids = {5};
  r.epsilons = {1.0};
  r.outputs = {1};
  t.append(r);
  const Population p = sample_population(2, make_scalar(0), make_scalar(1), 3);
  EXPECT_THROW(audit_transcript(t, p, QueryLog{}), AuditError);
}

}  // namespace
}  // namespace ldpsim
