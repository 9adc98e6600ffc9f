#include "ldpsim/core/engine.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <memory>
#include <numeric>

#include "ldpsim/core/errors.hpp"
#include "ldpsim/core/population.hpp"
#include "ldpsim/randomizers/randomized_response.hpp"
#include "test_util.hpp"

namespace ldpsim {
namespace {

using testing::ForeverDriver;
using testing::ScriptedDriver;

RandomizerPtr rr_alice(double eps) {
  return std::make_shared<RRQuery>(eps, std::make_shared<SidePredicate>(Side::kAlice));
}

Population pop(std::size_t n, std::uint64_t seed = 1) {
  return sample_population(n, make_scalar(0), make_scalar(1), seed);
}

std::vector<UserId> iota_users(UserId n) {
  std::vector<UserId> u(n);
  std::iota(u.begin(), u.end(), UserId{0});
  return u;
}

TEST(PopulationTest, SidesAreSeededAndBalanced) {
  const PayloadPtr x = make_scalar(0), y = make_scalar(1);
  const Population a = sample_population(4000, x, y, 3);
  const Population b = sample_population(4000, x, y, 3);
  const Population c = sample_population(4000, x, y, 4);
  EXPECT_TRUE(a == b);
  EXPECT_FALSE(a == c);
  EXPECT_TRUE(std::equal(a.sides().begin(), a.sides().end(),
                         pop(4000, 3).sides().begin()));
  EXPECT_EQ(a.count(Side::kAlice) + a.count(Side::kBob), 4000u);
  // 4 sigma around 2000.
  EXPECT_NEAR(static_cast<double>(a.count(Side::kAlice)), 2000.0, 4 * std::sqrt(1000.0));
  EXPECT_THROW(pop(0), std::invalid_argument);
}

TEST(EngineTest, NoninteractiveAllowsOneRoundOnly) {
  ScriptedDriver one({RoundRequest{iota_users(5), {rr_alice(1)}}});
  EXPECT_NO_THROW(execute(one, pop(5), InteractivityMode::kNoninteractive, 1));
  ScriptedDriver two({RoundRequest{{0, 1}, {rr_alice(1)}},
                      RoundRequest{{2, 3}, {rr_alice(1)}}});
  EXPECT_THROW(execute(two, pop(5), InteractivityMode::kNoninteractive, 1),
               InteractivityViolation);
}

TEST(EngineTest, SequentialRejectsARepeatedUser) {
  ScriptedDriver fresh({RoundRequest{{0, 1}, {rr_alice(1)}},
                        RoundRequest{{2, 3}, {rr_alice(1)}}});
  EXPECT_NO_THROW(execute(fresh, pop(5), InteractivityMode::kSequential, 1));
  ScriptedDriver repeat({RoundRequest{{0, 1}, {rr_alice(1)}},
                         RoundRequest{{1, 2}, {rr_alice(1)}}});
  try {
    execute(repeat, pop(5), InteractivityMode::kSequential, 1);
    FAIL() << "expected a violation";
  } catch (const InteractivityViolation& v) {
    EXPECT_EQ(v.user(), 1u);
    EXPECT_EQ(v.round(), 1u);
  }
  ScriptedDriver again({RoundRequest{{0, 1}, {rr_alice(1)}},
                        RoundRequest{{1, 2}, {rr_alice(1)}}});
  EXPECT_NO_THROW(execute(again, pop(5), InteractivityMode::kFull, 1));
}

TEST(EngineTest, RejectsMalformedRounds) {
  ScriptedDriver dup({RoundRequest{{0, 0}, {rr_alice(1)}}});
  EXPECT_THROW(execute(dup, pop(3), InteractivityMode::kFull, 1),
               InteractivityViolation);
  ScriptedDriver outside({RoundRequest{{7}, {rr_alice(1)}}});
  EXPECT_THROW(execute(outside, pop(3), InteractivityMode::kFull, 1), LdpError);
  ScriptedDriver empty({RoundRequest{{}, {rr_alice(1)}}});
  EXPECT_THROW(execute(empty, pop(3), InteractivityMode::kFull, 1),
               std::invalid_argument);
  ScriptedDriver count({RoundRequest{{0, 1, 2}, {rr_alice(1), rr_alice(1)}}});
  EXPECT_THROW(execute(count, pop(3), InteractivityMode::kFull, 1),
               std::invalid_argument);
}

TEST(EngineTest, DivergenceGuard) {
  ForeverDriver d(rr_alice(1));
  ExecuteOptions options;
  options.max_iterations = 50;
  EXPECT_THROW(execute(d, pop(2), InteractivityMode::kFull, 1, options),
               DivergenceError);
}

TEST(EngineTest, DeterministicGivenSeedAndPolicyInvariant) {
  std::vector<RoundRequest> rounds;
  for (int r = 0; r < 4; ++r) rounds.push_back({iota_users(6000), {rr_alice(0.7)}});
  ExecuteOptions serial, parallel;
  serial.kernel_policy = kernels::Policy::kSerial;
  parallel.kernel_policy = kernels::Policy::kParallel;
  ScriptedDriver d1(rounds), d2(rounds), d3(rounds), d4(rounds);
  const Population p = pop(6000);
  const Execution a = execute(d1, p, InteractivityMode::kFull, 11, serial);
  const Execution b = execute(d2, p, InteractivityMode::kFull, 11, parallel);
  const Execution c = execute(d3, p, InteractivityMode::kFull, 12, serial);
  EXPECT_TRUE(a.transcript == b.transcript);
  EXPECT_EQ(a.answer, b.answer);
  EXPECT_FALSE(a.transcript == c.transcript);
  const Execution again = execute(d4, p, InteractivityMode::kFull, 11);
  EXPECT_TRUE(a.transcript == again.transcript);
  EXPECT_EQ(sample_complexity(a.transcript), 6000u);
  EXPECT_EQ(round_complexity(a.transcript), 4u);
}

TEST(EngineTest, OutputFrequencyMatchesTheRandomizerLaw) {
  const double eps = 1.0;
  ScriptedDriver d({RoundRequest{iota_users(20000), {rr_alice(eps)}}});
  const Population p = pop(20000, 5);
  const Execution ex = execute(d, p, InteractivityMode::kNoninteractive, 3);
  std::uint64_t ones_alice = 0, ones_bob = 0;
  const RoundRecord& r = ex.transcript.back();
  for (std::size_t i = 0; i < r.size(); ++i) {
    (p.side(r.users[i]) == Side::kAlice ? ones_alice : ones_bob) += r.outputs[i];
  }
  const double q = std::exp(eps) / (std::exp(eps) + 1);
  const double na = static_cast<double>(p.count(Side::kAlice));
  const double nb = static_cast<double>(p.count(Side::kBob));
  EXPECT_NEAR(ones_alice / na, q, 4 * std::sqrt(q * (1 - q) / na));
  EXPECT_NEAR(ones_bob / nb, 1 - q, 4 * std::sqrt(q * (1 - q) / nb));
  EXPECT_EQ(r.epsilons[0], eps);
}

// Requests a public coin, then asks user 0 iff the coin came up 1.
class CoinDriver final : public ProtocolDriver {
 public:
  explicit CoinDriver(RandomizerPtr r) : r_(std::move(r)) {}
  DriverStep next(const Transcript& prefix) override {
    if (!asked_) {
      asked_ = true;
      return CoinRequest{0.5};
    }
    if (coin_ && prefix.empty()) return RoundRequest{{0}, {r_}};
    return Halt{Answer{AnswerStatus::kOk, {coin_ ? 1 : 0}}};
  }
  void on_public_coin(bool bit) override { coin_ = bit; }
  std::unique_ptr<ProtocolDriver> clone() const override {
    return std::make_unique<CoinDriver>(*this);
  }
  std::string name() const override { return "coin"; }

 private:
  RandomizerPtr r_;
  bool asked_ = false;
  bool coin_ = false;
};

TEST(EngineTest, PublicCoinsAreSeededAndDelivered) {
  int ones = 0;
  for (std::uint64_t s = 0; s < 400; ++s) {
    CoinDriver d(rr_alice(1));
    const Execution ex = execute(d, pop(1), InteractivityMode::kSequential, s);
    EXPECT_EQ(ex.coins_used, 1u);
    EXPECT_EQ(ex.transcript.rounds().size(), static_cast<std::size_t>(ex.answer.value[0]));
    ones += static_cast<int>(ex.answer.value[0]);
  }
  EXPECT_NEAR(ones, 200, 4 * 10);
}

}  // namespace
}  // namespace ldpsim
