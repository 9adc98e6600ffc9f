#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <string>
#include <vector>

#include "ldpsim/twoparty/protocol.hpp"

namespace ldpsim {

// Simultaneous-message protocol over single-bit inputs and single-bit
// messages. In round t both players send one bit that depends on their own
// input and on the 2t bits of earlier rounds, never on the other player's
// round-t bit. The history is serialized as A1 B1 A2 B2 ...
//
// tables[t][side] has 2 * 4^t entries: P(send 1) at index
// input * 4^t + history, history read big-endian.
class SimultaneousProtocol final : public TwoPartyProtocol {
 public:
  using RoundTables = std::array<std::vector<double>, 2>;

  SimultaneousProtocol(std::vector<RoundTables> tables,
                       ChannelSpec channel = ChannelSpec::noiseless());

  std::uint32_t rounds() const {
    return static_cast<std::uint32_t>(tables_->size());
  }
  const std::vector<RoundTables>& tables() const { return *tables_; }

  TwoPartyAction next_action() const override;
  double send_probability(const Datum& input) const override;
  void observe_bit(std::uint8_t received) override;
  std::string view() const override { return bits_; }
  const ChannelSpec& channel() const override { return channel_; }
  RoundMode round_mode() const override { return RoundMode::kSimultaneous; }
  std::uint32_t max_bits() const override { return 2 * rounds(); }
  std::unique_ptr<TwoPartyProtocol> clone() const override;
  std::string name() const override { return "simultaneous"; }

 private:
  std::shared_ptr<const std::vector<RoundTables>> tables_;
  ChannelSpec channel_;
  std::string bits_;
};

// Text format:
//   simultaneous rounds=<R> channel=noiseless|bsc flip=<f>
//   table <t> alice|bob <2 * 4^t probabilities>
void write_simultaneous_protocol(std::ostream& out,
                                 const SimultaneousProtocol& protocol);
// Throws FormatError.
SimultaneousProtocol read_simultaneous_protocol(std::istream& in);

}  // namespace ldpsim
