#include "ldpsim/twoparty/lift.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "ldpsim/randomizers/randomized_response.hpp"
#include "ldpsim/twoparty/channel.hpp"

namespace ldpsim {

LiftedBitRandomizer::LiftedBitRandomizer(double epsilon, Side sender,
                                         BitFunction f, std::string table)
    : epsilon_(epsilon), sender_(sender), f_(std::move(f)),
      table_(std::move(table)) {
  if (!(epsilon > 0) || !std::isfinite(epsilon)) {
    throw std::invalid_argument("lifted bit: epsilon must be positive");
  }
}

double LiftedBitRandomizer::probability_of_one(const Datum& datum) const {
  if (datum.is_sentinel() || datum.side != sender_) return 0.5;
  return rr_param(f_(datum), epsilon_);
}

std::string LiftedBitRandomizer::descriptor() const {
  std::string table = table_;
  if (table.empty()) {
    for (int v = 0; v < 2; ++v) {
      try {
        table.push_back(
            static_cast<char>('0' + f_(Datum{sender_, make_scalar(v)})));
      } catch (const std::exception&) {
        table.push_back('?');
      }
    }
  }
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.17g", epsilon_);
  return "lift(eps=" + std::string(buf) + ";sender=" + to_string(sender_) +
         ";table=" + table + ")";
}

LiftedDriver::LiftedDriver(std::unique_ptr<TwoPartyProtocol> protocol,
                           double epsilon)
    : protocol_(std::move(protocol)), epsilon_(epsilon) {}

LiftedDriver::LiftedDriver(const LiftedDriver& other)
    : protocol_(other.protocol_->clone()),
      epsilon_(other.epsilon_),
      next_user_(other.next_user_),
      awaiting_(other.awaiting_) {}

DriverStep LiftedDriver::next(const Transcript& prefix) {
  if (awaiting_) {
    protocol_->observe_bit(prefix.back().outputs.at(0));
    awaiting_ = false;
  }
  TwoPartyAction action = protocol_->next_action();
  if (auto* halt = std::get_if<HaltAction>(&action)) {
    return Halt{std::move(halt->answer)};
  }
  if (auto* coin = std::get_if<CoinAction>(&action)) {
    return CoinRequest{coin->probability_of_one};
  }
  const Side sender = std::get<SendAction>(action).sender;
  std::shared_ptr<const TwoPartyProtocol> snapshot = protocol_->clone();
  auto f = [snapshot](const Datum& input) {
    const double p = snapshot->send_probability(input);
    if (p != 0.0 && p != 1.0) {
      throw std::invalid_argument(
          "lift needs deterministic next-bit functions");
    }
    return p == 1.0 ? 1 : 0;
  };
  RoundRequest request;
  request.users.push_back(next_user_++);
  request.randomizers.push_back(std::make_shared<LiftedBitRandomizer>(
      epsilon_, sender, std::move(f), std::string()));
  awaiting_ = true;
  return request;
}

void LiftedDriver::on_public_coin(bool bit) { protocol_->observe_coin(bit); }

std::unique_ptr<ProtocolDriver> LiftedDriver::clone() const {
  return std::make_unique<LiftedDriver>(*this);
}

std::unique_ptr<LiftedDriver> lift_two_party_to_ldp(const TwoPartyProtocol& p,
                                                    double epsilon) {
  const ChannelSpec& ch = p.channel();
  const double want = lift_crossover(epsilon);
  if (ch.kind != ChannelKind::kBsc || std::fabs(ch.advantage() - want) > 1e-12) {
    throw std::invalid_argument("lift: channel " + describe(ch) +
                                " does not have advantage " +
                                std::to_string(want));
  }
  return std::make_unique<LiftedDriver>(p.clone(), epsilon);
}

}  // namespace ldpsim
