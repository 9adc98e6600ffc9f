#include "ldpsim/harness/experiment.hpp"

#include <gtest/gtest.h>

#include <cmath>

namespace ldpsim {
namespace {

ExperimentConfig small_hl() {
  ExperimentConfig c;
  c.branching = 3;
  c.num_layers = 4;
  c.epsilon = 1.0;
  c.group = 200;
  c.trials = 24;
  c.seed = 9;
  return c;
}

TEST(WilsonTest, ClosedFormExtremes) {
  const double z = kWilsonZ95, z2 = z * z;
  for (std::uint64_t t : {1u, 10u, 200u}) {
    const WilsonInterval none = wilson_interval(0, t);
    EXPECT_NEAR(none.lo, 0.0, 1e-15);
    EXPECT_NEAR(none.hi, z2 / (t + z2), 1e-12);
    const WilsonInterval all = wilson_interval(t, t);
    EXPECT_NEAR(all.lo, t / (t + z2), 1e-12);
    EXPECT_NEAR(all.hi, 1.0, 1e-15);
  }
  const WilsonInterval empty = wilson_interval(0, 0);
  EXPECT_EQ(empty.lo, 0.0);
  EXPECT_EQ(empty.hi, 1.0);
}

TEST(WilsonTest, MatchesTheScoreFormula) {
  const double z = kWilsonZ95;
  for (auto [s, n] : {std::pair<int, int>{3, 10}, {50, 100}, {91, 100}}) {
    const double p = static_cast<double>(s) / n;
    const double d = 1 + z * z / n;
    const double c = (p + z * z / (2 * n)) / d;
    const double h = z * std::sqrt(p * (1 - p) / n + z * z / (4.0 * n * n)) / d;
    const WilsonInterval w = wilson_interval(s, n);
    EXPECT_NEAR(w.lo, c - h, 1e-12);
    EXPECT_NEAR(w.hi, c + h, 1e-12);
  }
}

TEST(ExperimentTest, OutcomeCountsAddUp) {
  ExperimentConfig c = small_hl();
  c.group = 20;
  c.epsilon = 0.3;
  const ExperimentResult r = run_experiment(c);
  EXPECT_EQ(r.trials, c.trials);
  EXPECT_EQ(r.success_count + r.wrong_answers + r.decode_failures + r.engine_errors,
            c.trials);
  EXPECT_DOUBLE_EQ(r.success_rate, static_cast<double>(r.success_count) / c.trials);
  EXPECT_LE(r.ci_lo, r.success_rate);
  EXPECT_GE(r.ci_hi, r.success_rate);
}

TEST(ExperimentTest, SerialAndParallelAgree) {
  for (ExperimentConfig c : {small_hl(), [] {
         ExperimentConfig p;
         p.problem = ProblemKind::kPointerChasing;
         p.solver = SolverKind::kPCSolver;
         p.group = 40;
         p.trials = 16;
         p.seed = 4;
         return p;
       }()}) {
    const ExperimentResult a = run_experiment(c);
    const ExperimentResult b = run_experiment_serial(c);
    EXPECT_EQ(a.success_count, b.success_count);
    EXPECT_EQ(a.mean_sample_complexity, b.mean_sample_complexity);
    EXPECT_EQ(a.mean_round_complexity, b.mean_round_complexity);
    EXPECT_EQ(a.max_user_audit, b.max_user_audit);
    EXPECT_EQ(a.decode_failures, b.decode_failures);
  }
}

TEST(ExperimentTest, SingleTrialRate) {
  ExperimentConfig c = small_hl();
  c.trials = 1;
  c.epsilon = 20.0;
  const ExperimentResult r = run_experiment(c);
  EXPECT_TRUE(r.success_rate == 0.0 || r.success_rate == 1.0);
}

TEST(ExperimentTest, TraceReplaysTheTrial) {
  const ExperimentConfig c = small_hl();
  for (std::uint32_t t = 0; t < 6; ++t) {
    const TrialTrace tr = trace_trial(c, t);
    const TrialOutcome o = run_trial(c, t);
    EXPECT_EQ(o.kind == TrialOutcome::Kind::kSuccess, tr.success);
    EXPECT_EQ(o.round_complexity, round_complexity(tr.execution.transcript));
    EXPECT_EQ(o.sample_complexity, sample_complexity(tr.execution.transcript));
  }
}

TEST(ExperimentTest, Validation) {
  ExperimentConfig c = small_hl();
  c.trials = 0;
  EXPECT_THROW(c.validate(), std::invalid_argument);
  c = small_hl();
  c.epsilon = -1;
  EXPECT_THROW(c.validate(), std::invalid_argument);
  c = small_hl();
  c.solver = SolverKind::kPCSolver;
  EXPECT_THROW(c.validate(), std::invalid_argument);
  c = small_hl();
  c.group = 0;
  EXPECT_THROW(c.validate(), std::invalid_argument);
  c = small_hl();
  EXPECT_DOUBLE_EQ(c.effective_threshold(), 0.2);
  EXPECT_DOUBLE_EQ(c.query_epsilon(), 0.5);
  EXPECT_THROW(parse_problem("maze"), std::invalid_argument);
  EXPECT_THROW(parse_sweep_axis("depth"), std::invalid_argument);
  EXPECT_EQ(parse_sweep_axis("n"), SweepAxis::kGroup);
}

TEST(SweepTest, EmptyAndMonotone) {
  EXPECT_TRUE(sweep(small_hl(), SweepAxis::kGroup, {}).empty());
  ExperimentConfig c = small_hl();
  c.trials = 60;
  const auto rows = sweep(c, SweepAxis::kGroup, {5, 2000});
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_EQ(rows[0].config.group, 5u);
  EXPECT_EQ(rows[1].config.group, 2000u);
  EXPECT_LT(rows[0].result.success_rate, rows[1].result.success_rate);
  EXPECT_GE(rows[1].result.success_rate, 0.9);
  const auto bad = sweep(c, SweepAxis::kGroup, {0});
  ASSERT_EQ(bad.size(), 1u);
  EXPECT_FALSE(bad[0].error.empty());
}

}  // namespace
}  // namespace ldpsim
