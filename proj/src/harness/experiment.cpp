#include "ldpsim/harness/experiment.hpp"

#include <omp.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <stdexcept>

#include "ldpsim/core/engine.hpp"
#include "ldpsim/core/errors.hpp"
#include "ldpsim/core/population.hpp"
#include "ldpsim/core/rng.hpp"
#include "ldpsim/problems/hidden_layers.hpp"
#include "ldpsim/problems/pointer_chasing.hpp"
#include "ldpsim/randomizers/audit.hpp"
#include "ldpsim/solvers/hl_baseline.hpp"
#include "ldpsim/solvers/hl_solver.hpp"
#include "ldpsim/solvers/pc_solver.hpp"

namespace ldpsim {
namespace {

TrialOutcome finish(const Execution& exec, const Population& population,
                    const ExperimentConfig& config, bool success) {
  TrialOutcome out;
  out.sample_complexity = sample_complexity(exec.transcript);
  out.round_complexity = round_complexity(exec.transcript);
  if (config.audit) {
    AuditOptions options;
    options.kernel_policy = config.kernel_policy;
    out.max_user_audit =
        audit_transcript(exec.transcript, population, exec.query_log, options)
            .max_log_ratio();
  }
  if (exec.answer.status == AnswerStatus::kDecodeFailure) {
    out.kind = TrialOutcome::Kind::kDecodeFailure;
  } else if (exec.answer.status == AnswerStatus::kAborted) {
    out.kind = TrialOutcome::Kind::kError;
    out.error = "aborted";
  } else {
    out.kind = success ? TrialOutcome::Kind::kSuccess : TrialOutcome::Kind::kWrong;
  }
  return out;
}

TrialTrace hl_trace(const ExperimentConfig& config, std::uint64_t trial_seed,
                    const ExecuteOptions& options) {
  HLInstance instance = gen_hl_instance(
      config.branching, config.num_layers,
      derive_seed(trial_seed, kInstanceStream));
  const HLShape shape{config.branching, config.num_layers};
  std::unique_ptr<ProtocolDriver> driver;
  std::uint64_t users = config.group;
  InteractivityMode mode = InteractivityMode::kFull;
  if (config.solver == SolverKind::kHLSolver) {
    driver = std::make_unique<HLSolverDriver>(
        shape, HLSolverConfig{config.epsilon, config.group,
                              config.effective_threshold()});
  } else {
    auto baseline = std::make_unique<SequentialHLBaselineDriver>(
        shape, config.group, config.query_epsilon(),
        config.effective_threshold());
    users = baseline->max_users();
    mode = InteractivityMode::kSequential;
    driver = std::move(baseline);
  }
  Population population =
      sample_population(users, instance.alice_payload(),
                        instance.bob_payload(),
                        derive_seed(trial_seed, kPopulationStream));
  Execution exec =
      execute(*driver, population, mode,
              derive_seed(trial_seed, kExecutionStream), options);
  if (config.solver == SolverKind::kHLSolver &&
      max_true_votes(exec.transcript, exec.query_log, population) > 1) {
    throw LdpError("hlsolver: a user voted true more than once");
  }
  bool success = false;
  if (exec.answer.ok()) {
    LeafPath leaf;
    for (auto v : exec.answer.value) {
      if (v < 0 || v >= config.branching) {
        throw LdpError("hlsolver returned a malformed leaf");
      }
      leaf.path.push_back(static_cast<std::uint32_t>(v));
    }
    success = hl_consistent(leaf, instance);
  }
  return {std::move(instance), std::move(population), std::move(exec), success};
}

TrialTrace pc_trace(const ExperimentConfig& config, std::uint64_t trial_seed,
                    const ExecuteOptions& options) {
  PCInstance instance = gen_pc_instance(
      config.k, config.l, derive_seed(trial_seed, kInstanceStream));
  PCSolverDriver driver(PCShape{config.k, config.l},
                        PCSolverConfig{config.epsilon, config.group,
                                       config.effective_threshold()});
  Population population = sample_population(
      driver.users_required(), instance.alice_payload(), instance.bob_payload(),
      derive_seed(trial_seed, kPopulationStream));
  Execution exec =
      execute(driver, population, InteractivityMode::kSequential,
              derive_seed(trial_seed, kExecutionStream), options);
  const bool success = exec.answer.ok() && exec.answer.value.size() == 1 &&
                       exec.answer.value[0] == chase_oracle(instance);
  return {std::move(instance), std::move(population), std::move(exec), success};
}

ExperimentResult reduce(const ExperimentConfig& config,
                        const std::vector<TrialOutcome>& outcomes,
                        double seconds) {
  ExperimentResult r;
  r.trials = config.trials;
  std::uint64_t completed = 0;
  double samples = 0.0, rounds = 0.0;
  for (const TrialOutcome& t : outcomes) {
    switch (t.kind) {
      case TrialOutcome::Kind::kSuccess:
        ++r.success_count;
        break;
      case TrialOutcome::Kind::kWrong:
        ++r.wrong_answers;
        break;
      case TrialOutcome::Kind::kDecodeFailure:
        ++r.decode_failures;
        break;
      case TrialOutcome::Kind::kError:
        ++r.engine_errors;
        if (r.first_error.empty()) r.first_error = t.error;
        continue;
    }
    ++completed;
    samples += static_cast<double>(t.sample_complexity);
    rounds += static_cast<double>(t.round_complexity);
    r.max_user_audit = std::max(r.max_user_audit, t.max_user_audit);
  }
  if (completed > 0) {
    r.mean_sample_complexity = samples / static_cast<double>(completed);
    r.mean_round_complexity = rounds / static_cast<double>(completed);
  }
  r.success_rate = static_cast<double>(r.success_count) / r.trials;
  const WilsonInterval ci = wilson_interval(r.success_count, r.trials);
  r.ci_lo = ci.lo;
  r.ci_hi = ci.hi;
  r.wall_time_seconds = seconds;
  return r;
}

ExperimentResult run(const ExperimentConfig& config, bool parallel) {
  config.validate();
  const auto start = std::chrono::steady_clock::now();
  std::vector<TrialOutcome> outcomes(config.trials);
  const auto trials = static_cast<std::int64_t>(config.trials);
  if (parallel) {
#pragma omp parallel for schedule(dynamic, 1)
    for (std::int64_t t = 0; t < trials; ++t) {
      outcomes[t] = run_trial(config, static_cast<std::uint32_t>(t));
    }
  } else {
    for (std::int64_t t = 0; t < trials; ++t) {
      outcomes[t] = run_trial(config, static_cast<std::uint32_t>(t));
    }
  }
  const std::chrono::duration<double> elapsed =
      std::chrono::steady_clock::now() - start;
  return reduce(config, outcomes, elapsed.count());
}

}  // namespace

std::string to_string(ProblemKind kind) {
  return kind == ProblemKind::kHiddenLayers ? "hl" : "pc";
}

std::string to_string(SolverKind kind) {
  switch (kind) {
    case SolverKind::kHLSolver:
      return "hlsolver";
    case SolverKind::kPCSolver:
      return "pcsolver";
    case SolverKind::kHLBaseline:
      return "hl-baseline";
  }
  return "?";
}

ProblemKind parse_problem(const std::string& text) {
  if (text == "hl") return ProblemKind::kHiddenLayers;
  if (text == "pc") return ProblemKind::kPointerChasing;
  throw std::invalid_argument("unknown problem '" + text + "' (hl|pc)");
}

SolverKind parse_solver(const std::string& text) {
  if (text == "hlsolver") return SolverKind::kHLSolver;
  if (text == "pcsolver") return SolverKind::kPCSolver;
  if (text == "hl-baseline" || text == "baseline") return SolverKind::kHLBaseline;
  throw std::invalid_argument("unknown solver '" + text +
                              "' (hlsolver|pcsolver|hl-baseline)");
}

double ExperimentConfig::effective_threshold() const {
  if (threshold > 0.0) return threshold;
  return solver == SolverKind::kPCSolver ? 0.15 : 0.2;
}

double ExperimentConfig::query_epsilon() const {
  return solver == SolverKind::kPCSolver ? epsilon : epsilon / 2.0;
}

void ExperimentConfig::validate() const {
  if (trials < 1) throw std::invalid_argument("trials must be >= 1");
  if (!(epsilon > 0) || !std::isfinite(epsilon)) {
    throw std::invalid_argument("epsilon must be positive");
  }
  if (group < 1) throw std::invalid_argument("group size must be >= 1");
  if (!(gamma_target > 0 && gamma_target < 1) || !(eta >= 0) ||
      !(gamma_target + eta < 1)) {
    throw std::invalid_argument("need 0 < gamma, 0 <= eta, gamma + eta < 1");
  }
  const double thr = effective_threshold();
  if (!(thr > 0 && thr < 0.5)) {
    throw std::invalid_argument("threshold must lie in (0, 0.5)");
  }
  const bool hl_solver = solver != SolverKind::kPCSolver;
  if ((problem == ProblemKind::kHiddenLayers) != hl_solver) {
    throw std::invalid_argument("solver " + to_string(solver) +
                                " does not solve " + to_string(problem));
  }
  if (problem == ProblemKind::kHiddenLayers) {
    if (branching < 1 || num_layers < 2) {
      throw std::invalid_argument("HL needs B >= 1 and L >= 2");
    }
  } else if (k < 1 || l < 2) {
    throw std::invalid_argument("PC needs k >= 1 and l >= 2");
  }
}

WilsonInterval wilson_interval(std::uint64_t successes, std::uint64_t n,
                               double z) {
  if (n == 0) return {0.0, 1.0};
  if (successes > n) throw std::invalid_argument("successes > trials");
  const double nn = static_cast<double>(n);
  const double p = static_cast<double>(successes) / nn;
  const double z2 = z * z;
  const double denom = 1.0 + z2 / nn;
  const double centre = p + z2 / (2.0 * nn);
  const double half = z * std::sqrt(p * (1.0 - p) / nn + z2 / (4.0 * nn * nn));
  WilsonInterval ci{(centre - half) / denom, (centre + half) / denom};
  // The extremes are exact in closed form.
  if (successes == 0) ci.lo = 0.0;
  if (successes == n) ci.hi = 1.0;
  ci.lo = std::clamp(ci.lo, 0.0, 1.0);
  ci.hi = std::clamp(ci.hi, 0.0, 1.0);
  return ci;
}

TrialTrace trace_trial(const ExperimentConfig& config, std::uint32_t trial) {
  config.validate();
  const std::uint64_t trial_seed = derive_seed(config.seed, kTrialStream, trial);
  ExecuteOptions options;
  options.kernel_policy = config.kernel_policy;
  return config.problem == ProblemKind::kHiddenLayers
             ? hl_trace(config, trial_seed, options)
             : pc_trace(config, trial_seed, options);
}

TrialOutcome run_trial(const ExperimentConfig& config, std::uint32_t trial) {
  try {
    const TrialTrace trace = trace_trial(config, trial);
    return finish(trace.execution, trace.population, config, trace.success);
  } catch (const std::exception& e) {
    TrialOutcome out;
    out.kind = TrialOutcome::Kind::kError;
    out.error = e.what();
    return out;
  }
}

ExperimentResult run_experiment(const ExperimentConfig& config) {
  return run(config, config.parallel);
}

ExperimentResult run_experiment_serial(const ExperimentConfig& config) {
  return run(config, false);
}

std::string to_string(SweepAxis axis) {
  switch (axis) {
    case SweepAxis::kGroup:
      return "group";
    case SweepAxis::kEpsilon:
      return "epsilon";
    case SweepAxis::kB:
      return "B";
    case SweepAxis::kL:
      return "L";
    case SweepAxis::kK:
      return "k";
    case SweepAxis::kEll:
      return "l";
  }
  return "?";
}

SweepAxis parse_sweep_axis(const std::string& text) {
  if (text == "n" || text == "m" || text == "group") return SweepAxis::kGroup;
  if (text == "epsilon" || text == "eps") return SweepAxis::kEpsilon;
  if (text == "B") return SweepAxis::kB;
  if (text == "L") return SweepAxis::kL;
  if (text == "k") return SweepAxis::kK;
  if (text == "l" || text == "ell") return SweepAxis::kEll;
  throw std::invalid_argument("unknown sweep axis '" + text + "'");
}

std::vector<SweepRow> sweep(const ExperimentConfig& base, SweepAxis axis,
                            const std::vector<double>& values) {
  std::vector<SweepRow> rows;
  for (double v : values) {
    SweepRow row;
    row.config = base;
    row.value = v;
    auto as_count = [&](double x) {
      if (!(x >= 0) || x != std::floor(x) || x > 4294967295.0) {
        throw std::invalid_argument("sweep value " + std::to_string(x) +
                                    " is not a natural number");
      }
      return static_cast<std::uint32_t>(x);
    };
    try {
      switch (axis) {
        case SweepAxis::kGroup:
          row.config.group = as_count(v);
          break;
        case SweepAxis::kEpsilon:
          row.config.epsilon = v;
          break;
        case SweepAxis::kB:
          row.config.branching = as_count(v);
          break;
        case SweepAxis::kL:
          row.config.num_layers = as_count(v);
          break;
        case SweepAxis::kK:
          row.config.k = as_count(v);
          break;
        case SweepAxis::kEll:
          row.config.l = as_count(v);
          break;
      }
      row.result = run_experiment(row.config);
    } catch (const std::exception& e) {
      row.error = e.what();
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace ldpsim
