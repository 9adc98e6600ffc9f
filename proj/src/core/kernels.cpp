#include "ldpsim/core/kernels.hpp"

#include <cstddef>

#include "ldpsim/core/rng.hpp"

namespace ldpsim::kernels {

std::uint64_t respond_serial(std::span<const UserId> users,
                             std::span<const double> p_one,
                             std::uint64_t user_seed, std::uint64_t round,
                             std::span<std::uint8_t> outputs) {
  std::uint64_t ones = 0;
  for (std::size_t i = 0; i < users.size(); ++i) {
    const std::uint8_t bit =
        user_uniform(user_seed, users[i], round) < p_one[i] ? 1 : 0;
    outputs[i] = bit;
    ones += bit;
  }
  return ones;
}

std::uint64_t respond_parallel(std::span<const UserId> users,
                               std::span<const double> p_one,
                               std::uint64_t user_seed, std::uint64_t round,
                               std::span<std::uint8_t> outputs) {
  const auto n = static_cast<std::ptrdiff_t>(users.size());
  std::uint64_t ones = 0;
#pragma omp parallel for reduction(+ : ones) schedule(static)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    const std::uint8_t bit =
        user_uniform(user_seed, users[i], round) < p_one[i] ? 1 : 0;
    outputs[i] = bit;
    ones += bit;
  }
  return ones;
}

std::uint64_t respond(Policy policy, std::span<const UserId> users,
                      std::span<const double> p_one, std::uint64_t user_seed,
                      std::uint64_t round, std::span<std::uint8_t> outputs) {
  const bool parallel =
      policy == Policy::kParallel ||
      (policy == Policy::kAuto && users.size() >= kParallelThreshold);
  return parallel ? respond_parallel(users, p_one, user_seed, round, outputs)
                  : respond_serial(users, p_one, user_seed, round, outputs);
}

void accumulate_serial(std::span<const UserId> users,
                       std::span<const double> contribution,
                       std::span<double> totals) {
  for (std::size_t i = 0; i < users.size(); ++i) {
    totals[users[i]] += contribution[i];
  }
}

void accumulate_parallel(std::span<const UserId> users,
                         std::span<const double> contribution,
                         std::span<double> totals) {
  const auto n = static_cast<std::ptrdiff_t>(users.size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    totals[users[i]] += contribution[i];
  }
}

void accumulate(Policy policy, std::span<const UserId> users,
                std::span<const double> contribution, std::span<double> totals) {
  const bool parallel =
      policy == Policy::kParallel ||
      (policy == Policy::kAuto && users.size() >= kParallelThreshold);
  if (parallel) {
    accumulate_parallel(users, contribution, totals);
  } else {
    accumulate_serial(users, contribution, totals);
  }
}

}  // namespace ldpsim::kernels
