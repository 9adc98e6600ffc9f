#include "ldpsim/twoparty/lift.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "ldpsim/core/engine.hpp"
#include "ldpsim/core/population.hpp"
#include "ldpsim/randomizers/audit.hpp"
#include "ldpsim/randomizers/randomized_response.hpp"
#include "ldpsim/twoparty/channel.hpp"
#include "ldpsim/twoparty/enumerate.hpp"
#include "ldpsim/twoparty/families.hpp"
#include "ldpsim/twoparty/tree_protocol.hpp"

namespace ldpsim {
namespace {

const double kEps = std::log(2.0);

ChannelSpec lift_channel(double eps) {
  return ChannelSpec::bsc_with_advantage(lift_crossover(eps));
}

TEST(LiftTest, BitRandomizerLaw) {
  const LiftedBitRandomizer r(kEps, Side::kBob,
                              [](const Datum& d) {
                                return 1 - static_cast<int>(d.payload_as<ScalarPayload>()->value());
                              },
                              "");
  const Datum b0{Side::kBob, make_scalar(0)}, b1{Side::kBob, make_scalar(1)};
  EXPECT_EQ(r.probability_of_one(b0), rr_param(1, kEps));
  EXPECT_EQ(r.probability_of_one(b1), rr_param(0, kEps));
  EXPECT_EQ(r.probability_of_one(Datum{Side::kAlice, make_scalar(0)}), 0.5);
  EXPECT_EQ(r.probability_of_one(sentinel_datum()), 0.5);
  EXPECT_EQ(r.sender(), Side::kBob);
}

TEST(LiftTest, RejectsWrongChannel) {
  TreeProtocol t(1, ChannelSpec::noiseless());
  t.set_node("", {Side::kAlice, 0.0, 1.0});
  EXPECT_THROW(lift_two_party_to_ldp(t, kEps), std::invalid_argument);
  t.set_channel(ChannelSpec::bsc(0.3));
  EXPECT_THROW(lift_two_party_to_ldp(t, kEps), std::invalid_argument);
  t.set_channel(lift_channel(kEps));
  EXPECT_NO_THROW(lift_two_party_to_ldp(t, kEps));
}

TEST(LiftTest, RejectsRandomizedBitWhenReached) {
  TreeProtocol t(1, lift_channel(kEps));
  t.set_node("", {Side::kAlice, 0.4, 1.0});
  auto lifted = lift_two_party_to_ldp(t, kEps);
  const Population p = sample_population(1, make_scalar(0), make_scalar(0), 1);
  EXPECT_THROW(execute(*lifted, p, InteractivityMode::kSequential, 2),
               std::invalid_argument);
}

TEST(LiftTest, RandomTreesMatchTheirLift) {
  std::mt19937_64 rng(31);
  EnumerateOptions opt;
  opt.key = OutcomeKey::kViewAndAnswer;
  for (int i = 0; i < 300; ++i) {
    const TreeProtocol t = random_tree_protocol(3, lift_channel(kEps), rng);
    auto lifted = lift_two_party_to_ldp(t, kEps);
    for (int x = 0; x < 2; ++x) {
      for (int y = 0; y < 2; ++y) {
        const auto two = enumerate_transcript_distribution(
            t, bit_input(Side::kAlice, x), bit_input(Side::kBob, y), opt);
        const auto multi = enumerate_ldp_distribution(
            *lifted, make_scalar(x), make_scalar(y), InteractivityMode::kSequential, opt);
        EXPECT_LE(tv_distance(two, multi), 1e-12);
      }
    }
  }
}

TEST(LiftTest, OneUserPerBitAndAuditWithinBudget) {
  std::mt19937_64 rng(77);
  for (int i = 0; i < 50; ++i) {
    const TreeProtocol t = random_tree_protocol(3, lift_channel(kEps), rng);
    auto lifted = lift_two_party_to_ldp(t, kEps);
    const Population p = sample_population(3, make_scalar(i & 1), make_scalar(0), i);
    const Execution ex = execute(*lifted, p, InteractivityMode::kSequential, i + 1);
    for (const RoundRecord& r : ex.transcript.rounds()) EXPECT_EQ(r.size(), 1u);
    EXPECT_EQ(sample_complexity(ex.transcript), round_complexity(ex.transcript));
    const AuditReport a = audit_transcript(ex.transcript, p, ex.query_log);
    EXPECT_LE(a.max_log_ratio(), kEps + 1e-12);
  }
}

}  // namespace
}  // namespace ldpsim
