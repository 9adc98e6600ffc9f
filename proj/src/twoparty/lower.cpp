#include "ldpsim/twoparty/lower.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "ldpsim/core/errors.hpp"
#include "ldpsim/twoparty/channel.hpp"

namespace ldpsim {
namespace {

constexpr double kClampSlack = 1e-12;

double clamp_checked(double q, const std::string& what) {
  if (q < -kClampSlack || q > 1.0 + kClampSlack || std::isnan(q)) {
    throw ReductionError("lowering: send probability " + std::to_string(q) +
                         " outside [0,1] for " + what +
                         "; the query breaks the privacy bound");
  }
  return std::clamp(q, 0.0, 1.0);
}

}  // namespace

double case1_send_probability(double p, double p_min, double p_max,
                              double advantage) {
  const double s = p_min + p_max;
  return 0.5 + p / (2.0 * advantage * s) - 1.0 / (4.0 * advantage);
}

UserPlan plan_user(const Randomizer& r, const std::vector<Datum>& universe) {
  if (universe.empty()) throw std::invalid_argument("empty data universe");
  UserPlan plan;
  plan.p_min = 1.0;
  plan.p_max = 0.0;
  for (const Datum& x : universe) {
    const double p = r.probability_of_one(x);
    if (!(p >= 0.0 && p <= 1.0)) {
      throw ReductionError("lowering: " + r.descriptor() +
                           " has an invalid law");
    }
    plan.p_min = std::min(plan.p_min, p);
    plan.p_max = std::max(plan.p_max, p);
  }
  const double s = plan.p_min + plan.p_max;
  if (s <= 1.0) {
    plan.plan_case = 1;
    plan.coverage = s;
    plan.skip_bit = 0;
  } else {
    plan.plan_case = 2;
    plan.coverage = 2.0 - s;
    plan.skip_bit = 1;
  }
  return plan;
}

double planned_send_probability(const UserPlan& plan, const Randomizer& r,
                                const Datum& input, double advantage) {
  // Nothing sent is ever used.
  if (plan.coverage <= 0.0) return 0.5;
  const double p = r.probability_of_one(input);
  if (plan.plan_case == 1) {
    return clamp_checked(
        case1_send_probability(p, plan.p_min, plan.p_max, advantage),
        r.descriptor());
  }
  // Same construction on complements; the value is P(send 0).
  const double q0 = case1_send_probability(1.0 - p, 1.0 - plan.p_max,
                                           1.0 - plan.p_min, advantage);
  return 1.0 - clamp_checked(q0, r.descriptor());
}

LoweredProtocol::LoweredProtocol(const OneBitLdpProtocol& q,
                                 std::uint32_t user_cap)
    : driver_(q.driver->clone()),
      universe_(std::make_shared<const std::vector<Datum>>(q.universe)),
      epsilon_(q.epsilon),
      user_cap_(user_cap),
      channel_(ChannelSpec::bsc_with_advantage(lower_crossover(q.epsilon))),
      guard_(InteractivityMode::kSequential, std::max<std::uint32_t>(user_cap, 1)) {
  if (universe_->empty()) throw std::invalid_argument("empty data universe");
  owner_.reserve(user_cap);
  advance();
}

LoweredProtocol::LoweredProtocol(const LoweredProtocol& other)
    : driver_(other.driver_->clone()),
      universe_(other.universe_),
      epsilon_(other.epsilon_),
      user_cap_(other.user_cap_),
      channel_(other.channel_),
      guard_(other.guard_),
      stage_(other.stage_),
      owner_(other.owner_),
      transcript_(other.transcript_),
      entered_(other.entered_),
      plans_(other.plans_),
      driver_coin_p_(other.driver_coin_p_),
      answer_(other.answer_),
      round_(other.round_),
      round_bits_(other.round_bits_),
      round_pos_(other.round_pos_),
      received_(other.received_) {}

void LoweredProtocol::advance() {
  if (stage_ == Stage::kPartition && owner_.size() < user_cap_) return;
  for (;;) {
    DriverStep step = driver_->next(transcript_);
    if (auto* halt = std::get_if<Halt>(&step)) {
      answer_ = std::move(halt->answer);
      stage_ = Stage::kHalted;
      return;
    }
    if (auto* coin = std::get_if<CoinRequest>(&step)) {
      driver_coin_p_ = coin->probability_of_one;
      stage_ = Stage::kDriverCoin;
      return;
    }
    round_ = std::move(std::get<RoundRequest>(step));
    const std::size_t n = round_.users.size();
    if (n == 0 ||
        (round_.randomizers.size() != 1 && round_.randomizers.size() != n)) {
      throw std::invalid_argument("lowering: malformed round request");
    }
    for (UserId u : round_.users) {
      if (u >= user_cap_) {
        answer_ = Answer{AnswerStatus::kAborted, {}};
        stage_ = Stage::kHalted;
        return;
      }
    }
    guard_.admit(transcript_.rounds().size(), round_.users);
    const double adv = channel_.advantage();
    for (std::size_t i = 0; i < n; ++i) {
      const Randomizer& r = *round_.randomizers[round_.randomizers.size() == 1 ? 0 : i];
      UserPlan plan = plan_user(r, *universe_);
      for (const Datum& x : *universe_) {
        planned_send_probability(plan, r, x, adv);
      }
      plans_.push_back(plan);
    }
    round_bits_.clear();
    round_pos_ = 0;
    stage_ = Stage::kSend;
    return;
  }
}

TwoPartyAction LoweredProtocol::next_action() const {
  switch (stage_) {
    case Stage::kPartition:
      return CoinAction{0.5};
    case Stage::kSend:
      return SendAction{owner_[round_.users[round_pos_]]};
    case Stage::kUse:
      return CoinAction{plans_[plans_.size() - round_.users.size() + round_pos_]
                            .coverage};
    case Stage::kDriverCoin:
      return CoinAction{driver_coin_p_};
    case Stage::kHalted:
      break;
  }
  return HaltAction{answer_};
}

double LoweredProtocol::send_probability(const Datum& input) const {
  if (stage_ != Stage::kSend) throw std::logic_error("lowering: no pending send");
  const std::size_t n = round_.users.size();
  const Randomizer& r =
      *round_.randomizers[round_.randomizers.size() == 1 ? 0 : round_pos_];
  return planned_send_probability(plans_[plans_.size() - n + round_pos_], r,
                                  input, channel_.advantage());
}

void LoweredProtocol::observe_bit(std::uint8_t received) {
  if (stage_ != Stage::kSend) throw std::logic_error("lowering: unexpected bit");
  received_ = received ? 1 : 0;
  stage_ = Stage::kUse;
}

void LoweredProtocol::observe_coin(bool bit) {
  switch (stage_) {
    case Stage::kPartition:
      owner_.push_back(bit ? Side::kBob : Side::kAlice);
      advance();
      return;
    case Stage::kUse: {
      const std::size_t n = round_.users.size();
      const UserPlan& plan = plans_[plans_.size() - n + round_pos_];
      const std::uint8_t entered = bit ? received_ : plan.skip_bit;
      round_bits_.push_back(entered);
      entered_.push_back(static_cast<char>('0' + entered));
      if (++round_pos_ < n) {
        stage_ = Stage::kSend;
      } else {
        finish_round();
        advance();
      }
      return;
    }
    case Stage::kDriverCoin:
      driver_->on_public_coin(bit);
      advance();
      return;
    default:
      throw std::logic_error("lowering: unexpected coin");
  }
}

void LoweredProtocol::finish_round() {
  RoundRecord record;
  record.round_index = transcript_.rounds().size();
  record.users = round_.users;
  for (std::size_t i = 0; i < round_.users.size(); ++i) {
    const std::size_t k = round_.randomizers.size() == 1 ? 0 : i;
    record.randomizer_ids.push_back(static_cast<RandomizerId>(k));
    record.epsilons.push_back(round_.randomizers[k]->epsilon());
  }
  record.outputs = round_bits_;
  transcript_.append(std::move(record));
}

std::unique_ptr<TwoPartyProtocol> LoweredProtocol::clone() const {
  return std::make_unique<LoweredProtocol>(*this);
}

std::unique_ptr<LoweredProtocol> lower_multi_to_two_party(
    const OneBitLdpProtocol& q, std::uint32_t user_cap) {
  if (!q.driver) throw std::invalid_argument("lowering: missing driver");
  return std::make_unique<LoweredProtocol>(q, user_cap);
}

AdaptiveOneBitDriver::AdaptiveOneBitDriver(
    std::vector<std::vector<RandomizerPtr>> choices, bool single_round)
    : single_round_(single_round) {
  if (choices.empty() || choices.size() > 16) {
    throw std::invalid_argument("adaptive driver needs 1..16 steps");
  }
  for (std::size_t i = 0; i < choices.size(); ++i) {
    const std::size_t want = single_round ? 1 : (std::size_t{1} << i);
    if (choices[i].size() < want) {
      throw std::invalid_argument("adaptive driver step " + std::to_string(i) +
                                  " needs " + std::to_string(want) +
                                  " randomizers");
    }
    for (const auto& r : choices[i]) {
      if (!r) throw std::invalid_argument("adaptive driver: null randomizer");
    }
  }
  choices_ = std::make_shared<const std::vector<std::vector<RandomizerPtr>>>(
      std::move(choices));
}

DriverStep AdaptiveOneBitDriver::next(const Transcript& prefix) {
  const std::size_t steps = choices_->size();
  const std::size_t done = single_round_
                               ? (prefix.empty() ? 0 : steps)
                               : prefix.rounds().size();
  if (done == steps) {
    Answer answer;
    for (const auto& round : prefix.rounds()) {
      for (auto bit : round.outputs) answer.value.push_back(bit);
    }
    return Halt{std::move(answer)};
  }
  RoundRequest request;
  if (single_round_) {
    for (std::size_t i = 0; i < steps; ++i) {
      request.users.push_back(static_cast<UserId>(i));
      request.randomizers.push_back((*choices_)[i][0]);
    }
    return request;
  }
  std::size_t history = 0;
  for (const auto& round : prefix.rounds()) {
    history = (history << 1) | round.outputs.at(0);
  }
  request.users.push_back(static_cast<UserId>(done));
  request.randomizers.push_back((*choices_)[done][history]);
  return request;
}

std::unique_ptr<ProtocolDriver> AdaptiveOneBitDriver::clone() const {
  return std::make_unique<AdaptiveOneBitDriver>(*this);
}

std::vector<Datum> bit_universe() {
  return {bit_input(Side::kAlice, 0), bit_input(Side::kAlice, 1),
          bit_input(Side::kBob, 0), bit_input(Side::kBob, 1)};
}

}  // namespace ldpsim
