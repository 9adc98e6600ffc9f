#include "ldpsim/twoparty/rounds.hpp"

#include <stdexcept>

namespace ldpsim {
namespace {

// Canonical index of A_t is 2(t-1), of B_t is 2(t-1)+1.
std::vector<std::uint32_t> alternating_order(std::uint32_t rounds) {
  std::vector<std::uint32_t> order;
  order.push_back(1);  // B1
  for (std::uint32_t turn = 1; turn <= rounds; ++turn) {
    const std::uint32_t offset = turn % 2 == 1 ? 0 : 1;
    for (std::uint32_t t = turn; t <= turn + 1 && t <= rounds; ++t) {
      order.push_back(2 * (t - 1) + offset);
    }
  }
  return order;
}

}  // namespace

AlternatingFromSimultaneous::AlternatingFromSimultaneous(
    std::unique_ptr<TwoPartyProtocol> inner, std::uint32_t rounds)
    : inner_(std::move(inner)),
      rounds_(rounds),
      order_(alternating_order(rounds)),
      known_(2 * rounds, -1) {
  if (rounds == 0) throw std::invalid_argument("need at least one round");
}

AlternatingFromSimultaneous::AlternatingFromSimultaneous(
    const AlternatingFromSimultaneous& other)
    : inner_(other.inner_->clone()),
      rounds_(other.rounds_),
      order_(other.order_),
      known_(other.known_),
      position_(other.position_),
      fed_(other.fed_) {}

TwoPartyAction AlternatingFromSimultaneous::next_action() const {
  TwoPartyAction inner = inner_->next_action();
  if (std::holds_alternative<HaltAction>(inner)) return inner;
  if (std::holds_alternative<CoinAction>(inner)) {
    throw std::logic_error("alternating transform: public coins unsupported");
  }
  if (position_ >= order_.size()) {
    throw std::logic_error("alternating transform: inner did not halt");
  }
  return SendAction{order_[position_] % 2 == 0 ? Side::kAlice : Side::kBob};
}

double AlternatingFromSimultaneous::send_probability(const Datum& input) const {
  const std::uint32_t target = order_.at(position_);
  if (fed_ == target) return inner_->send_probability(input);
  // The target bit does not depend on the other player's same-round bit, so
  // a placeholder stands in for anything not yet sent.
  auto probe = inner_->clone();
  for (std::uint32_t i = fed_; i < target; ++i) {
    probe->observe_bit(known_[i] < 0 ? 0 : static_cast<std::uint8_t>(known_[i]));
  }
  return probe->send_probability(input);
}

void AlternatingFromSimultaneous::observe_bit(std::uint8_t received) {
  known_.at(order_.at(position_)) = received ? 1 : 0;
  ++position_;
  feed();
}

void AlternatingFromSimultaneous::observe_coin(bool bit) {
  inner_->observe_coin(bit);
}

void AlternatingFromSimultaneous::feed() {
  while (fed_ < known_.size() && known_[fed_] >= 0) {
    inner_->observe_bit(static_cast<std::uint8_t>(known_[fed_]));
    ++fed_;
  }
}

std::unique_ptr<TwoPartyProtocol> AlternatingFromSimultaneous::clone() const {
  return std::make_unique<AlternatingFromSimultaneous>(*this);
}

std::unique_ptr<TwoPartyProtocol> simultaneous_to_alternating(
    const TwoPartyProtocol& p) {
  if (p.round_mode() != RoundMode::kSimultaneous) {
    throw std::invalid_argument("simultaneous_to_alternating: input is " +
                                to_string(p.round_mode()));
  }
  if (p.max_bits() == 0 || p.max_bits() % 2 != 0) {
    throw std::invalid_argument(
        "simultaneous_to_alternating: need one bit per player per round");
  }
  return std::make_unique<AlternatingFromSimultaneous>(p.clone(),
                                                       p.max_bits() / 2);
}

}  // namespace ldpsim
