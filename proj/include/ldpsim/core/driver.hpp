#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "ldpsim/core/randomizer.hpp"
#include "ldpsim/core/transcript.hpp"

namespace ldpsim {

enum class AnswerStatus : std::uint8_t { kOk, kDecodeFailure, kAborted };

std::string to_string(AnswerStatus status);

struct Answer {
  AnswerStatus status = AnswerStatus::kOk;
  std::vector<std::int64_t> value;

  bool ok() const { return status == AnswerStatus::kOk; }
  bool operator==(const Answer&) const = default;
};

std::string describe(const Answer& answer);

// Query a set of users in one round. `randomizers` holds either one entry,
// shared by every user, or exactly one entry per user.
struct RoundRequest {
  std::vector<UserId> users;
  std::vector<RandomizerPtr> randomizers;
};

// Ask the engine for one bit of shared public randomness.
struct CoinRequest {
  double probability_of_one = 0.5;
};

struct Halt {
  Answer answer;
};

using DriverStep = std::variant<RoundRequest, CoinRequest, Halt>;

// The analyst side of a locally private protocol. A driver observes the
// transcript prefix and public coins it requested, and nothing else; its
// behaviour must be a deterministic function of those.
//
// Drivers keep per-execution state and are not shared between executions.
// clone() copies that state so exact enumerators can branch.
class ProtocolDriver {
 public:
  virtual ~ProtocolDriver() = default;

  virtual DriverStep next(const Transcript& prefix) = 0;
  // Delivers the outcome of the most recent CoinRequest.
  virtual void on_public_coin(bool bit);
  virtual std::unique_ptr<ProtocolDriver> clone() const = 0;
  virtual std::string name() const = 0;
};

}  // namespace ldpsim
