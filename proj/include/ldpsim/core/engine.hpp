#pragma once

#include <cstdint>
#include <vector>

#include "ldpsim/core/driver.hpp"
#include "ldpsim/core/kernels.hpp"
#include "ldpsim/core/population.hpp"
#include "ldpsim/core/transcript.hpp"

namespace ldpsim {

enum class InteractivityMode : std::uint8_t {
  kNoninteractive,
  kSequential,
  kFull,
};

std::string to_string(InteractivityMode mode);
InteractivityMode parse_interactivity_mode(const std::string& text);

// Tracks which users have spoken and rejects rounds that the mode forbids.
// Shared by the engine and the exact enumerators.
class InteractivityGuard {
 public:
  InteractivityGuard(InteractivityMode mode, std::size_t population_size);

  // Throws InteractivityViolation naming the offending user and round.
  void admit(std::uint64_t round, std::span<const UserId> users);

 private:
  InteractivityMode mode_;
  std::vector<std::uint8_t> seen_;
  std::vector<std::uint64_t> last_round_;
};

struct ExecuteOptions {
  // Driver iterations (rounds plus coin requests) before DivergenceError.
  std::uint64_t max_iterations = 10'000'000;
  kernels::Policy kernel_policy = kernels::Policy::kAuto;
};

struct Execution {
  Transcript transcript;
  QueryLog query_log;
  Answer answer;
  std::uint64_t coins_used = 0;
};

// Runs the round loop: ask the driver for a step, let the selected users
// apply their randomizers, append the round, repeat until Halt. The result
// is a deterministic function of (driver state, population, mode, seed).
Execution execute(ProtocolDriver& driver, const Population& population,
                  InteractivityMode mode, std::uint64_t seed,
                  const ExecuteOptions& options = {});

}  // namespace ldpsim
