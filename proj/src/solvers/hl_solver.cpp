#include "ldpsim/solvers/hl_solver.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "ldpsim/randomizers/randomized_response.hpp"

namespace ldpsim {

void HLSolverConfig::validate() const {
  if (!(epsilon > 0) || !std::isfinite(epsilon)) {
    throw std::invalid_argument("hlsolver: epsilon must be positive");
  }
  if (n < 1) throw std::invalid_argument("hlsolver: n must be >= 1");
  if (!(threshold > 0 && threshold < 1)) {
    throw std::invalid_argument("hlsolver: threshold must be in (0, 1)");
  }
}

HLSolverDriver::HLSolverDriver(HLShape shape, HLSolverConfig config)
    : shape_(shape), config_(config), walk_(shape, config.threshold) {
  config_.validate();
  auto users = std::make_shared<std::vector<UserId>>(config_.n);
  std::iota(users->begin(), users->end(), UserId{0});
  users_ = std::move(users);
}

DriverStep HLSolverDriver::next(const Transcript& prefix) {
  if (awaiting_) {
    const RoundRecord& last = prefix.back();
    walk_.observe(
        debias(last.count_ones(), last.size(), config_.per_query_epsilon()));
    awaiting_ = false;
  }
  if (walk_.done()) {
    Answer answer;
    for (std::uint32_t c : walk_.vertex()) answer.value.push_back(c);
    return Halt{std::move(answer)};
  }
  RoundRequest request;
  request.users = *users_;
  request.randomizers.push_back(std::make_shared<RRQuery>(
      config_.per_query_epsilon(), walk_.pending_predicate()));
  awaiting_ = true;
  return request;
}

std::unique_ptr<ProtocolDriver> HLSolverDriver::clone() const {
  return std::make_unique<HLSolverDriver>(*this);
}

std::unique_ptr<ProtocolDriver> hlsolver_drive(HLShape shape,
                                               const HLSolverConfig& config) {
  return std::make_unique<HLSolverDriver>(shape, config);
}

std::uint64_t max_true_votes(const Transcript& transcript,
                             const QueryLog& query_log,
                             const Population& population) {
  std::vector<std::uint64_t> votes(population.size(), 0);
  // vote[id][side], -1 = not an RR query
  std::vector<std::array<int, 2>> cache;
  for (const RoundRecord& round : transcript.rounds()) {
    for (std::size_t i = 0; i < round.size(); ++i) {
      const RandomizerId id = round.randomizer_ids[i];
      if (id >= cache.size()) cache.resize(id + 1, {-2, -2});
      const Side side = population.side(round.users[i]);
      int& slot = cache[id][static_cast<std::size_t>(side)];
      if (slot == -2) {
        const auto* rr = dynamic_cast<const RRQuery*>(&query_log.at(id));
        slot = rr == nullptr ? -1 : (rr->vote(population.datum_for(side)) ? 1 : 0);
      }
      if (slot == 1) ++votes[round.users[i]];
    }
  }
  std::uint64_t worst = 0;
  for (auto v : votes) worst = std::max(worst, v);
  return worst;
}

}  // namespace ldpsim
