#pragma once

#include <cstdint>
#include <memory>
#include <random>
#include <string>
#include <variant>
#include <vector>

#include "ldpsim/core/datum.hpp"
#include "ldpsim/core/driver.hpp"
#include "ldpsim/twoparty/channel.hpp"

namespace ldpsim {

enum class RoundMode : std::uint8_t { kAlternating, kSimultaneous };
std::string to_string(RoundMode mode);

struct SendAction {
  Side sender = Side::kAlice;
};
struct CoinAction {
  double probability_of_one = 0.5;
};
struct HaltAction {
  Answer answer;
};
using TwoPartyAction = std::variant<SendAction, CoinAction, HaltAction>;

// A two-party protocol as a state machine over the shared history. After
// every observed bit or public coin, next_action() says what happens next.
// For a pending send, send_probability(input) is the law of the bit the
// sender transmits when holding `input`. The channel then delivers a
// possibly flipped bit, which both players observe.
//
// view() is the transcript the protocol exposes for comparison; for plain
// protocols it is the received bit string.
class TwoPartyProtocol {
 public:
  virtual ~TwoPartyProtocol() = default;

  virtual TwoPartyAction next_action() const = 0;
  virtual double send_probability(const Datum& input) const = 0;
  virtual void observe_bit(std::uint8_t received) = 0;
  virtual void observe_coin(bool bit);

  virtual std::string view() const = 0;
  virtual const ChannelSpec& channel() const = 0;
  virtual RoundMode round_mode() const { return RoundMode::kAlternating; }
  virtual std::uint32_t max_bits() const = 0;
  virtual std::unique_ptr<TwoPartyProtocol> clone() const = 0;
  virtual std::string name() const = 0;
};

// Player input holding a single bit.
Datum bit_input(Side side, int bit);
// Reads the bit back. Throws std::invalid_argument for anything else.
int input_bit(const Datum& input);

struct TwoPartyRun {
  std::string sent;      // bits as sent
  std::string received;  // bits after the channel
  std::vector<Side> senders;
  std::string view;
  Answer answer;
  std::uint64_t coins = 0;
};

// Samples one execution. Throws LdpError if p exceeds max_bits.
TwoPartyRun run_two_party(TwoPartyProtocol& p, const Datum& alice_input,
                          const Datum& bob_input, std::mt19937_64& rng);

// Number of maximal runs of consecutive bits by the same sender.
std::uint32_t count_alternating_rounds(const std::vector<Side>& senders);

}  // namespace ldpsim
