#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "ldpsim/twoparty/protocol.hpp"

namespace ldpsim {

// Reschedules an R-round simultaneous protocol into R+1 alternating turns
//   B1 | A1 A2 | B2 B3 | A3 A4 | ...
// Each bit still has the law the simultaneous protocol gives it, because
// everything it depends on has been sent by then. view() and the answer
// are the wrapped protocol's, i.e. in simultaneous order.
class AlternatingFromSimultaneous final : public TwoPartyProtocol {
 public:
  AlternatingFromSimultaneous(std::unique_ptr<TwoPartyProtocol> inner,
                              std::uint32_t rounds);
  AlternatingFromSimultaneous(const AlternatingFromSimultaneous& other);

  std::uint32_t turns() const { return rounds_ + 1; }
  // Canonical (simultaneous-order) index of the i-th sent bit.
  const std::vector<std::uint32_t>& order() const { return order_; }

  TwoPartyAction next_action() const override;
  double send_probability(const Datum& input) const override;
  void observe_bit(std::uint8_t received) override;
  void observe_coin(bool bit) override;
  std::string view() const override { return inner_->view(); }
  const ChannelSpec& channel() const override { return inner_->channel(); }
  std::uint32_t max_bits() const override { return inner_->max_bits(); }
  std::unique_ptr<TwoPartyProtocol> clone() const override;
  std::string name() const override { return "alternating"; }

 private:
  void feed();

  std::unique_ptr<TwoPartyProtocol> inner_;
  std::uint32_t rounds_;
  std::vector<std::uint32_t> order_;
  std::vector<int> known_;  // -1 until the canonical bit is sent
  std::uint32_t position_ = 0;  // bits sent so far
  std::uint32_t fed_ = 0;       // canonical bits delivered to inner_
};

// Rounds are max_bits() / 2. Throws std::invalid_argument unless p is
// simultaneous.
std::unique_ptr<TwoPartyProtocol> simultaneous_to_alternating(
    const TwoPartyProtocol& p);

}  // namespace ldpsim
