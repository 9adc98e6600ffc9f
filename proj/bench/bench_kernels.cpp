// Serial reference vs OpenMP paths for the hot kernels and for whole
// experiments. Run with OMP_NUM_THREADS set to the cores available.

#include <benchmark/benchmark.h>

#include <numeric>
#include <vector>

#include "ldpsim/core/kernels.hpp"
#include "ldpsim/core/rng.hpp"
#include "ldpsim/harness/experiment.hpp"

namespace ldpsim {
namespace {

struct RespondInputs {
  explicit RespondInputs(std::size_t n) : users(n), p_one(n), outputs(n) {
    std::iota(users.begin(), users.end(), UserId{0});
    for (std::size_t i = 0; i < n; ++i) p_one[i] = (i % 2) ? 0.73 : 0.27;
  }
  std::vector<UserId> users;
  std::vector<double> p_one;
  std::vector<std::uint8_t> outputs;
};

void BM_RespondSerial(benchmark::State& state) {
  RespondInputs in(static_cast<std::size_t>(state.range(0)));
  std::uint64_t round = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(kernels::respond_serial(
        in.users, in.p_one, 42, round++, in.outputs));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_RespondParallel(benchmark::State& state) {
  RespondInputs in(static_cast<std::size_t>(state.range(0)));
  std::uint64_t round = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(kernels::respond_parallel(
        in.users, in.p_one, 42, round++, in.outputs));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_AccumulateSerial(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::vector<UserId> users(n);
  std::iota(users.begin(), users.end(), UserId{0});
  std::vector<double> contribution(n, 0.5), totals(n, 0.0);
  for (auto _ : state) {
    kernels::accumulate_serial(users, contribution, totals);
    benchmark::ClobberMemory();
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_AccumulateParallel(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::vector<UserId> users(n);
  std::iota(users.begin(), users.end(), UserId{0});
  std::vector<double> contribution(n, 0.5), totals(n, 0.0);
  for (auto _ : state) {
    kernels::accumulate_parallel(users, contribution, totals);
    benchmark::ClobberMemory();
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

ExperimentConfig pc_config() {
  ExperimentConfig cfg;
  cfg.problem = ProblemKind::kPointerChasing;
  cfg.solver = SolverKind::kPCSolver;
  cfg.group = 2366;
  cfg.trials = 16;
  cfg.seed = 1;
  return cfg;
}

void BM_ExperimentSerial(benchmark::State& state) {
  const ExperimentConfig cfg = pc_config();
  for (auto _ : state) benchmark::DoNotOptimize(run_experiment_serial(cfg));
}

void BM_ExperimentParallel(benchmark::State& state) {
  ExperimentConfig cfg = pc_config();
  cfg.parallel = true;
  for (auto _ : state) benchmark::DoNotOptimize(run_experiment(cfg));
}

BENCHMARK(BM_RespondSerial)->Range(1 << 12, 1 << 20);
BENCHMARK(BM_RespondParallel)->Range(1 << 12, 1 << 20);
BENCHMARK(BM_AccumulateSerial)->Range(1 << 12, 1 << 20);
BENCHMARK(BM_AccumulateParallel)->Range(1 << 12, 1 << 20);
BENCHMARK(BM_ExperimentSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ExperimentParallel)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace ldpsim

BENCHMARK_MAIN();
