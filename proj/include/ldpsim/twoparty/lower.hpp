#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ldpsim/core/driver.hpp"
#include "ldpsim/core/engine.hpp"
#include "ldpsim/core/transcript.hpp"
#include "ldpsim/twoparty/protocol.hpp"

namespace ldpsim {

// A sequentially interactive protocol where each user answers one bit. The
// response law p_x of any query is read from the randomizer on each datum
// of `universe`.
struct OneBitLdpProtocol {
  std::shared_ptr<const ProtocolDriver> driver;
  std::vector<Datum> universe;
  double epsilon = 1.0;
};

// How one simulated user's bit is sent over the channel.
struct UserPlan {
  int plan_case = 1;       // 1: p_min + p_max <= 1, 2: otherwise
  double coverage = 1.0;    // probability the received bit is used
  std::uint8_t skip_bit = 0;  // literal entered when it is not
  double p_min = 0.0;
  double p_max = 0.0;
};

// Raw case-1 send probability 1/2 + p/(2 adv s) - 1/(4 adv), s = lo + hi.
double case1_send_probability(double p, double p_min, double p_max,
                              double advantage);

UserPlan plan_user(const Randomizer& r, const std::vector<Datum>& universe);
// P(send 1) for a sender holding `input`. Throws ReductionError when the
// value leaves [0, 1] by more than 1e-12; smaller excursions are clamped.
double planned_send_probability(const UserPlan& plan, const Randomizer& r,
                                const Datum& input, double advantage);

// Two-party simulation of a one-bit protocol over a BSC with advantage
// lower_crossover(epsilon). Public coins first split users 0..user_cap-1
// between Alice (coin 0) and Bob (coin 1). Each simulated user's bit is
// then sent by its owner and entered into the simulated transcript
// according to a public use/skip coin. A user id >= user_cap aborts the
// run. view() is the entered bits.
class LoweredProtocol final : public TwoPartyProtocol {
 public:
  LoweredProtocol(const OneBitLdpProtocol& q, std::uint32_t user_cap);
  LoweredProtocol(const LoweredProtocol& other);

  TwoPartyAction next_action() const override;
  double send_probability(const Datum& input) const override;
  void observe_bit(std::uint8_t received) override;
  void observe_coin(bool bit) override;
  std::string view() const override { return entered_; }
  const ChannelSpec& channel() const override { return channel_; }
  std::uint32_t max_bits() const override { return user_cap_; }
  std::unique_ptr<TwoPartyProtocol> clone() const override;
  std::string name() const override { return "lower"; }

  // Plans of the users simulated so far, in query order.
  const std::vector<UserPlan>& plans() const { return plans_; }

 private:
  enum class Stage : std::uint8_t {
    kPartition, kSend, kUse, kDriverCoin, kHalted
  };
  void advance();
  void finish_round();

  std::unique_ptr<ProtocolDriver> driver_;
  std::shared_ptr<const std::vector<Datum>> universe_;
  double epsilon_;
  std::uint32_t user_cap_;
  ChannelSpec channel_;
  InteractivityGuard guard_;

  Stage stage_ = Stage::kPartition;
  std::vector<Side> owner_;
  Transcript transcript_;
  std::string entered_;
  std::vector<UserPlan> plans_;
  double driver_coin_p_ = 0.5;
  Answer answer_;

  RoundRequest round_;
  std::vector<std::uint8_t> round_bits_;
  std::size_t round_pos_ = 0;
  std::uint8_t received_ = 0;
};

std::unique_ptr<LoweredProtocol> lower_multi_to_two_party(
    const OneBitLdpProtocol& q, std::uint32_t user_cap);

// Small one-bit protocol for tests and the CLI. Step i queries user i with
// choices[i][o], o = the big-endian value of the outputs of steps < i. When
// `single_round` is set, every step shares round 0 and uses choices[i][0].
// The answer is the output bit string.
class AdaptiveOneBitDriver final : public ProtocolDriver {
 public:
  AdaptiveOneBitDriver(std::vector<std::vector<RandomizerPtr>> choices,
                       bool single_round);

  DriverStep next(const Transcript& prefix) override;
  std::unique_ptr<ProtocolDriver> clone() const override;
  std::string name() const override { return "adaptive-one-bit"; }

 private:
  std::shared_ptr<const std::vector<std::vector<RandomizerPtr>>> choices_;
  bool single_round_;
};

// The data universe {Alice, Bob} x {0, 1} of single-bit inputs.
std::vector<Datum> bit_universe();

}  // namespace ldpsim
