#include <gtest/gtest.h>

#include <cmath>

#include "ldpsim/core/engine.hpp"
#include "ldpsim/core/population.hpp"
#include "ldpsim/harness/experiment.hpp"
#include "ldpsim/problems/hidden_layers.hpp"
#include "ldpsim/problems/pointer_chasing.hpp"
#include "ldpsim/randomizers/audit.hpp"
#include "ldpsim/solvers/hl_baseline.hpp"
#include "ldpsim/solvers/hl_solver.hpp"
#include "ldpsim/solvers/hl_walk.hpp"
#include "ldpsim/solvers/pc_solver.hpp"

namespace ldpsim {
namespace {

ExperimentConfig hl_config(std::uint32_t b, std::uint32_t l, double eps,
                           std::uint32_t n, std::uint32_t trials) {
  ExperimentConfig c;
  c.problem = ProblemKind::kHiddenLayers;
  c.solver = SolverKind::kHLSolver;
  c.branching = b;
  c.num_layers = l;
  c.epsilon = eps;
  c.group = n;
  c.trials = trials;
  c.seed = 2024;
  return c;
}

ExperimentConfig pc_config(std::uint32_t k, std::uint32_t l, double eps,
                           std::uint32_t m, std::uint32_t trials) {
  ExperimentConfig c;
  c.problem = ProblemKind::kPointerChasing;
  c.solver = SolverKind::kPCSolver;
  c.k = k;
  c.l = l;
  c.epsilon = eps;
  c.group = m;
  c.trials = trials;
  c.seed = 77;
  return c;
}

TEST(HiddenLayerWalkTest, DescendsOnThresholdAndTakesLastChild) {
  HiddenLayerWalk w(HLShape{3, 2}, 0.2);
  EXPECT_EQ(w.level(), 0u);
  EXPECT_EQ(w.child(), 0u);
  w.observe(0.1);  // child 0 rejected
  EXPECT_EQ(w.child(), 1u);
  w.observe(0.2);  // not strictly above
  EXPECT_EQ(w.child(), 2u);
  w.observe(-5.0);  // last child taken regardless
  EXPECT_EQ(w.vertex(), (VertexPath{2}));
  w.observe(0.9);
  EXPECT_TRUE(w.done());
  EXPECT_EQ(w.leaf().path, (std::vector<std::uint32_t>{2, 0}));
  EXPECT_EQ(w.queries(), 4u);
}

TEST(HiddenLayerWalkTest, PendingPredicateNamesTheEdge) {
  HiddenLayerWalk w(HLShape{2, 3}, 0.2);
  w.observe(1.0);
  w.observe(0.0);
  const auto p = w.pending_predicate();
  const auto* e = dynamic_cast<const HlEdgePredicate*>(p.get());
  ASSERT_NE(e, nullptr);
  EXPECT_EQ(e->layer(), 1u);
  EXPECT_EQ(e->vertex(), (VertexPath{0}));
  EXPECT_EQ(e->child(), 1u);
}

TEST(HLSolverTest, NearNoiselessBudgetFindsConsistentLeaves) {
  const ExperimentResult r = run_experiment(hl_config(4, 9, 20.0, 50, 100));
  EXPECT_GE(r.success_count, 95u);
  EXPECT_EQ(r.engine_errors, 0u);
  EXPECT_LE(r.max_user_audit, 20.0 + 1e-9);
}

TEST(HLSolverTest, RoundsUsersAndVotesPerTrial) {
  const ExperimentConfig c = hl_config(4, 9, 1.0, 300, 15);
  for (std::uint32_t t = 0; t < c.trials; ++t) {
    const TrialTrace tr = trace_trial(c, t);
    const auto rounds = round_complexity(tr.execution.transcript);
    EXPECT_GE(rounds, 9u);
    EXPECT_LE(rounds, 36u);
    EXPECT_EQ(sample_complexity(tr.execution.transcript), 300u);
    EXPECT_LE(max_true_votes(tr.execution.transcript, tr.execution.query_log,
                             tr.population),
              1u);
    for (const RoundRecord& rec : tr.execution.transcript.rounds()) {
      EXPECT_EQ(rec.size(), 300u);
      EXPECT_EQ(rec.epsilons[0], 0.5);
    }
    const AuditReport a = audit_transcript(tr.execution.transcript, tr.population,
                                           tr.execution.query_log);
    EXPECT_LE(a.max_log_ratio(), 1.0 + 1e-9);
  }
}

TEST(HLSolverTest, BranchingOneWalksTheUniquePath) {
  const ExperimentConfig c = hl_config(1, 5, 1.0, 10, 3);
  for (std::uint32_t t = 0; t < 3; ++t) {
    const TrialTrace tr = trace_trial(c, t);
    EXPECT_TRUE(tr.success);
    EXPECT_EQ(tr.execution.answer.value, (std::vector<std::int64_t>(5, 0)));
    EXPECT_EQ(round_complexity(tr.execution.transcript), 5u);
  }
}

TEST(HLSolverTest, ConfigValidation) {
  EXPECT_THROW((HLSolverConfig{0.0, 10, 0.2}.validate()), std::invalid_argument);
  EXPECT_THROW((HLSolverConfig{1.0, 0, 0.2}.validate()), std::invalid_argument);
  EXPECT_THROW((HLSolverConfig{1.0, 10, 1.0}.validate()), std::invalid_argument);
  EXPECT_EQ((HLSolverConfig{1.0, 10, 0.2}.per_query_epsilon()), 0.5);
  EXPECT_THROW((PCSolverConfig{1.0, 10, 0.0}.validate()), std::invalid_argument);
}

TEST(PCSolverTest, NearNoiselessBudgetIsExact) {
  const ExperimentResult r = run_experiment(pc_config(3, 16, 20.0, 80, 60));
  EXPECT_EQ(r.success_count, 60u);
  EXPECT_DOUBLE_EQ(r.mean_round_complexity, 4.0 * 4.0);
  EXPECT_DOUBLE_EQ(r.mean_sample_complexity, 4.0 * 4.0 * 80.0);
}

TEST(PCSolverTest, ShapeAndSequentialUse) {
  PCSolverDriver d(PCShape{5, 8}, PCSolverConfig{1.0, 7, 0.15});
  EXPECT_EQ(d.width(), 3u);
  EXPECT_EQ(d.phases(), 6u);
  EXPECT_EQ(d.users_required(), 6u * 3u * 7u);
  const ExperimentConfig c = pc_config(5, 8, 2.0, 7, 5);
  for (std::uint32_t t = 0; t < 5; ++t) {
    const TrialTrace tr = trace_trial(c, t);
    for (const RoundRecord& rec : tr.execution.transcript.rounds()) {
      EXPECT_EQ(rec.size(), 7u);
      EXPECT_EQ(rec.epsilons[0], 2.0);
    }
  }
}

TEST(PCSolverTest, OutOfRangeCodeHaltsWithDecodeFailure) {
  // l = 3 uses 2 bits, so code 3 (value 4) cannot be a pointer. With one
  // noisy user per bit that code shows up often.
  const ExperimentConfig c = pc_config(2, 3, 0.2, 1, 200);
  std::uint32_t failures = 0;
  for (std::uint32_t t = 0; t < c.trials; ++t) {
    const TrialTrace tr = trace_trial(c, t);
    if (tr.execution.answer.status != AnswerStatus::kDecodeFailure) continue;
    ++failures;
    const auto rounds = round_complexity(tr.execution.transcript);
    EXPECT_EQ(rounds % 2, 0u);  // halts right after a full phase
    EXPECT_LE(rounds, 6u);
    EXPECT_FALSE(tr.success);
  }
  EXPECT_GT(failures, 0u);
  const ExperimentResult r = run_experiment(c);
  EXPECT_EQ(r.decode_failures, failures);
}

TEST(PCSolverTest, FollowsTheEightPointerChain) {
  PCInstance fig;
  fig.k = 5;
  fig.l = 8;
  fig.a = {8, 6, 5, 1, 2, 4, 3, 7};
  fig.b = {1, 2, 4, 6, 7, 8, 3, 5};
  // Only about half the users hold the queried side, so m is generous.
  PCSolverDriver d(PCShape{5, 8}, PCSolverConfig{30.0, 80, 0.15});
  const Population p = sample_population(d.users_required(), fig.alice_payload(),
                                         fig.bob_payload(), 5);
  const Execution ex = execute(d, p, InteractivityMode::kSequential, 6);
  ASSERT_TRUE(ex.answer.ok());
  EXPECT_EQ(ex.answer.value, (std::vector<std::int64_t>{8}));
}

TEST(BaselineTest, FreshGroupPerQueryUnderSequentialMode) {
  ExperimentConfig c = hl_config(4, 5, 20.0, 40, 10);
  c.solver = SolverKind::kHLBaseline;
  for (std::uint32_t t = 0; t < c.trials; ++t) {
    const TrialTrace tr = trace_trial(c, t);
    EXPECT_TRUE(tr.success);
    const auto rounds = round_complexity(tr.execution.transcript);
    EXPECT_EQ(sample_complexity(tr.execution.transcript), rounds * 40u);
    EXPECT_GE(rounds, 5u);
    EXPECT_LE(rounds, 20u);
  }
  SequentialHLBaselineDriver d(HLShape{4, 5}, 40, 0.5);
  EXPECT_EQ(d.max_users(), 4u * 5u * 40u);
}

}  // namespace
}  // namespace ldpsim
