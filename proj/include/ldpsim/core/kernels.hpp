#pragma once

#include <cstdint>
#include <span>

#include "ldpsim/core/transcript.hpp"

namespace ldpsim::kernels {

// Data-parallel inner loops. Each has a serial reference and an OpenMP
// version; both must produce bit-identical results for the same inputs.

enum class Policy : std::uint8_t { kSerial, kParallel, kAuto };

// Below this many items kAuto stays serial.
inline constexpr std::size_t kParallelThreshold = 4096;

// outputs[i] = 1 iff user_uniform(user_seed, users[i], round) < p_one[i].
// Returns the number of ones.
std::uint64_t respond_serial(std::span<const UserId> users,
                             std::span<const double> p_one,
                             std::uint64_t user_seed, std::uint64_t round,
                             std::span<std::uint8_t> outputs);
std::uint64_t respond_parallel(std::span<const UserId> users,
                               std::span<const double> p_one,
                               std::uint64_t user_seed, std::uint64_t round,
                               std::span<std::uint8_t> outputs);
std::uint64_t respond(Policy policy, std::span<const UserId> users,
                      std::span<const double> p_one, std::uint64_t user_seed,
                      std::uint64_t round, std::span<std::uint8_t> outputs);

// totals[users[i]] += contribution[i]. Users within one call are distinct.
void accumulate_serial(std::span<const UserId> users,
                       std::span<const double> contribution,
                       std::span<double> totals);
void accumulate_parallel(std::span<const UserId> users,
                         std::span<const double> contribution,
                         std::span<double> totals);
void accumulate(Policy policy, std::span<const UserId> users,
                std::span<const double> contribution, std::span<double> totals);

}  // namespace ldpsim::kernels
