#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <string>

#include "ldpsim/core/driver.hpp"
#include "ldpsim/core/randomizer.hpp"
#include "ldpsim/twoparty/protocol.hpp"

namespace ldpsim {

// One lifted protocol bit. A user on the sender's side answers randomized
// response on f(own payload); a user on the other side outputs a fair bit.
// The sentinel datum also gets a fair bit.
class LiftedBitRandomizer final : public Randomizer {
 public:
  using BitFunction = std::function<int(const Datum&)>;

  // `table` is f on scalar inputs 0 and 1, used only in the descriptor;
  // when empty it is computed from f on demand.
  LiftedBitRandomizer(double epsilon, Side sender, BitFunction f,
                      std::string table);

  double epsilon() const override { return epsilon_; }
  Side sender() const { return sender_; }
  double probability_of_one(const Datum& datum) const override;
  std::string descriptor() const override;

 private:
  double epsilon_;
  Side sender_;
  BitFunction f_;
  std::string table_;
};

// Runs a two-party protocol with one fresh user per protocol bit.
class LiftedDriver final : public ProtocolDriver {
 public:
  LiftedDriver(std::unique_ptr<TwoPartyProtocol> protocol, double epsilon);
  LiftedDriver(const LiftedDriver& other);

  DriverStep next(const Transcript& prefix) override;
  void on_public_coin(bool bit) override;
  std::unique_ptr<ProtocolDriver> clone() const override;
  std::string name() const override { return "lift(" + protocol_->name() + ")"; }

  const TwoPartyProtocol& protocol() const { return *protocol_; }

 private:
  std::unique_ptr<TwoPartyProtocol> protocol_;
  double epsilon_;
  UserId next_user_ = 0;
  bool awaiting_ = false;
};

// Throws std::invalid_argument unless p runs over a BSC whose advantage is
// lift_crossover(epsilon) (to within 1e-12). A non-deterministic next bit
// is rejected with std::invalid_argument when it is reached.
std::unique_ptr<LiftedDriver> lift_two_party_to_ldp(const TwoPartyProtocol& p,
                                                    double epsilon);

}  // namespace ldpsim
