#include "ldpsim/twoparty/protocol.hpp"

#include <stdexcept>

#include "ldpsim/core/errors.hpp"

namespace ldpsim {

std::string to_string(RoundMode mode) {
  return mode == RoundMode::kAlternating ? "alternating" : "simultaneous";
}

void TwoPartyProtocol::observe_coin(bool) {
  throw std::logic_error(name() + " does not use public coins");
}

Datum bit_input(Side side, int bit) {
  if (bit != 0 && bit != 1) throw std::invalid_argument("input bit not 0/1");
  return Datum{side, make_scalar(bit)};
}

int input_bit(const Datum& input) {
  const auto* scalar = input.payload_as<ScalarPayload>();
  if (scalar == nullptr || (scalar->value() != 0 && scalar->value() != 1)) {
    throw std::invalid_argument("expected a single-bit input, got " +
                                describe(input));
  }
  return static_cast<int>(scalar->value());
}

TwoPartyRun run_two_party(TwoPartyProtocol& p, const Datum& alice_input,
                          const Datum& bob_input, std::mt19937_64& rng) {
  TwoPartyRun run;
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const ChannelSpec& channel = p.channel();
  for (;;) {
    TwoPartyAction action = p.next_action();
    if (auto* halt = std::get_if<HaltAction>(&action)) {
      run.view = p.view();
      run.answer = std::move(halt->answer);
      return run;
    }
    if (auto* coin = std::get_if<CoinAction>(&action)) {
      ++run.coins;
      p.observe_coin(unit(rng) < coin->probability_of_one);
      continue;
    }
    if (run.sent.size() >= p.max_bits()) {
      throw LdpError(p.name() + " exceeded its bit budget");
    }
    const Side sender = std::get<SendAction>(action).sender;
    const Datum& input = sender == Side::kAlice ? alice_input : bob_input;
    const std::uint8_t bit = unit(rng) < p.send_probability(input) ? 1 : 0;
    std::uint8_t received = bit;
    if (channel.kind == ChannelKind::kBsc) {
      received = bsc_transmit(bit, channel, rng).received;
    }
    run.sent.push_back(static_cast<char>('0' + bit));
    run.received.push_back(static_cast<char>('0' + received));
    run.senders.push_back(sender);
    p.observe_bit(received);
  }
}

std::uint32_t count_alternating_rounds(const std::vector<Side>& senders) {
  std::uint32_t rounds = 0;
  for (std::size_t i = 0; i < senders.size(); ++i) {
    if (i == 0 || senders[i] != senders[i - 1]) ++rounds;
  }
  return rounds;
}

}  // namespace ldpsim
