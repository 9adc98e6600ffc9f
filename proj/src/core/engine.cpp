#include "ldpsim/core/engine.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <variant>

#include "ldpsim/core/errors.hpp"
#include "ldpsim/core/rng.hpp"

namespace ldpsim {

std::string to_string(InteractivityMode mode) {
  switch (mode) {
    case InteractivityMode::kNoninteractive:
      return "noninteractive";
    case InteractivityMode::kSequential:
      return "sequential";
    case InteractivityMode::kFull:
      return "full";
  }
  return "unknown";
}

InteractivityMode parse_interactivity_mode(const std::string& text) {
  if (text == "noninteractive") return InteractivityMode::kNoninteractive;
  if (text == "sequential") return InteractivityMode::kSequential;
  if (text == "full") return InteractivityMode::kFull;
  throw std::invalid_argument("unknown interactivity mode: " + text);
}

InteractivityGuard::InteractivityGuard(InteractivityMode mode,
                                       std::size_t population_size)
    : mode_(mode),
      seen_(population_size, 0),
      last_round_(population_size, std::numeric_limits<std::uint64_t>::max()) {}

void InteractivityGuard::admit(std::uint64_t round,
                               std::span<const UserId> users) {
  if (users.empty()) {
    throw std::invalid_argument("round " + std::to_string(round) +
                                " selects no users");
  }
  if (mode_ == InteractivityMode::kNoninteractive && round > 0) {
    throw InteractivityViolation(users.front(), round,
                                 "noninteractive protocols have one round");
  }
  for (UserId user : users) {
    if (user >= seen_.size()) {
      throw LdpError("round " + std::to_string(round) + " selects user " +
                     std::to_string(user) + " outside the population");
    }
    if (last_round_[user] == round) {
      throw InteractivityViolation(user, round,
                                   "user selected twice in one round");
    }
    if (mode_ == InteractivityMode::kSequential && seen_[user]) {
      throw InteractivityViolation(
          user, round, "sequential protocols query each user at most once");
    }
    seen_[user] = 1;
    last_round_[user] = round;
  }
}

namespace {

constexpr double kUnset = -1.0;

}  // namespace

Execution execute(ProtocolDriver& driver, const Population& population,
                  InteractivityMode mode, std::uint64_t seed,
                  const ExecuteOptions& options) {
  Execution result;
  InteractivityGuard guard(mode, population.size());
  PublicStream coins(derive_seed(seed, kPublicStream));
  const std::uint64_t user_seed = derive_seed(seed, kUserStream);

  // p_one per (randomizer id, side); randomizers are shared across rounds.
  std::vector<std::array<double, 2>> law_cache;
  auto law = [&](RandomizerId id, Side side) {
    if (id >= law_cache.size()) law_cache.resize(id + 1, {kUnset, kUnset});
    auto& slot = law_cache[id][static_cast<std::size_t>(side)];
    if (slot == kUnset) {
      slot = result.query_log.at(id).probability_of_one(
          population.datum_for(side));
      if (!(slot >= 0.0 && slot <= 1.0)) {
        throw LdpError("randomizer " + result.query_log.at(id).descriptor() +
                       " returned an invalid probability");
      }
    }
    return slot;
  };

  std::vector<double> p_one;
  for (std::uint64_t iteration = 0;; ++iteration) {
    if (iteration >= options.max_iterations) {
      throw DivergenceError(driver.name() + " did not halt within " +
                            std::to_string(options.max_iterations) +
                            " iterations");
    }
    DriverStep step = driver.next(result.transcript);

    if (auto* halt = std::get_if<Halt>(&step)) {
      result.answer = std::move(halt->answer);
      return result;
    }
    if (auto* coin = std::get_if<CoinRequest>(&step)) {
      const bool bit = to_unit_interval(coins()) < coin->probability_of_one;
      ++result.coins_used;
      driver.on_public_coin(bit);
      continue;
    }

    auto& request = std::get<RoundRequest>(step);
    const std::uint64_t round = result.transcript.rounds().size();
    const std::size_t n = request.users.size();
    if (request.randomizers.size() != 1 && request.randomizers.size() != n) {
      throw std::invalid_argument(
          driver.name() + ": round needs one randomizer or one per user");
    }
    guard.admit(round, request.users);

    RoundRecord record;
    record.round_index = round;
    record.randomizer_ids.resize(n);
    record.epsilons.resize(n);
    record.outputs.resize(n);
    p_one.resize(n);

    if (request.randomizers.size() == 1) {
      const RandomizerId id = result.query_log.intern(request.randomizers[0]);
      const double eps = request.randomizers[0]->epsilon();
      const std::array<double, 2> by_side = {law(id, Side::kAlice),
                                             law(id, Side::kBob)};
      for (std::size_t i = 0; i < n; ++i) {
        record.randomizer_ids[i] = id;
        record.epsilons[i] = eps;
        p_one[i] = by_side[static_cast<std::size_t>(
            population.side(request.users[i]))];
      }
    } else {
      for (std::size_t i = 0; i < n; ++i) {
        const RandomizerId id = result.query_log.intern(request.randomizers[i]);
        record.randomizer_ids[i] = id;
        record.epsilons[i] = request.randomizers[i]->epsilon();
        p_one[i] = law(id, population.side(request.users[i]));
      }
    }
    record.users = std::move(request.users);
    kernels::respond(options.kernel_policy, record.users, p_one, user_seed,
                     round, record.outputs);
    result.transcript.append(std::move(record));
  }
}

}  // namespace ldpsim
