#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ldpsim/core/engine.hpp"
#include "ldpsim/core/kernels.hpp"
#include "ldpsim/core/population.hpp"
#include "ldpsim/problems/instance_io.hpp"

namespace ldpsim {

enum class ProblemKind : std::uint8_t { kHiddenLayers, kPointerChasing };
enum class SolverKind : std::uint8_t { kHLSolver, kPCSolver, kHLBaseline };

std::string to_string(ProblemKind kind);
std::string to_string(SolverKind kind);
// Throws std::invalid_argument for unknown names.
ProblemKind parse_problem(const std::string& text);
SolverKind parse_solver(const std::string& text);

struct ExperimentConfig {
  ProblemKind problem = ProblemKind::kHiddenLayers;
  std::uint32_t branching = 4;   // HL
  std::uint32_t num_layers = 9;  // HL
  std::uint32_t k = 3;           // PC
  std::uint32_t l = 16;          // PC

  SolverKind solver = SolverKind::kHLSolver;
  double epsilon = 1.0;
  // Users per query: n for the HL solver, m for PC, the group for the
  // baseline.
  std::uint32_t group = 100;
  double threshold = 0.0;  // 0 picks the solver default (0.2 HL, 0.15 PC)

  std::uint32_t trials = 1;
  std::uint64_t seed = 0;
  double gamma_target = 0.1;
  double eta = 0.1;

  bool audit = true;
  bool parallel = true;
  kernels::Policy kernel_policy = kernels::Policy::kAuto;

  double effective_threshold() const;
  // Per-query budget: epsilon/2 for the HL solver and the baseline, epsilon
  // for PC.
  double query_epsilon() const;
  // Throws std::invalid_argument.
  void validate() const;
};

struct ExperimentResult {
  std::uint32_t trials = 0;
  std::uint32_t success_count = 0;
  double success_rate = 0.0;
  double ci_lo = 0.0;
  double ci_hi = 0.0;
  double mean_sample_complexity = 0.0;
  double mean_round_complexity = 0.0;
  double max_user_audit = 0.0;
  std::uint32_t decode_failures = 0;
  std::uint32_t wrong_answers = 0;
  std::uint32_t engine_errors = 0;
  std::string first_error;
  double wall_time_seconds = 0.0;
};

struct WilsonInterval {
  double lo = 0.0;
  double hi = 1.0;
};

inline constexpr double kWilsonZ95 = 1.959963984540054;

// Wilson score interval; n = 0 gives [0, 1].
WilsonInterval wilson_interval(std::uint64_t successes, std::uint64_t n,
                               double z = kWilsonZ95);

// Outcome of one seeded trial.
struct TrialOutcome {
  enum class Kind : std::uint8_t { kSuccess, kWrong, kDecodeFailure, kError };
  Kind kind = Kind::kError;
  std::uint64_t sample_complexity = 0;
  std::uint64_t round_complexity = 0;
  double max_user_audit = 0.0;
  std::string error;
};

// Everything one trial produced, before scoring.
struct TrialTrace {
  Instance instance;
  Population population;
  Execution execution;
  bool success = false;  // answer ok and correct
};

// Replays trial t exactly as run_trial does. Throws on engine errors.
TrialTrace trace_trial(const ExperimentConfig& config, std::uint32_t trial);

// Trial t draws its instance, population and execution from
// derive_seed(config.seed, kTrialStream, t).
TrialOutcome run_trial(const ExperimentConfig& config, std::uint32_t trial);

// Runs trials in parallel when config.parallel is set; either way the
// result is reduced in trial order and is identical.
ExperimentResult run_experiment(const ExperimentConfig& config);
ExperimentResult run_experiment_serial(const ExperimentConfig& config);

enum class SweepAxis : std::uint8_t { kGroup, kEpsilon, kB, kL, kK, kEll };
std::string to_string(SweepAxis axis);
// Accepts n, m, group, epsilon, B, L, k, l.
SweepAxis parse_sweep_axis(const std::string& text);

struct SweepRow {
  ExperimentConfig config;
  double value = 0.0;
  ExperimentResult result;
  std::string error;  // non-empty when the row could not run
};

std::vector<SweepRow> sweep(const ExperimentConfig& base, SweepAxis axis,
                            const std::vector<double>& values);

}  // namespace ldpsim
