#include "ldpsim/twoparty/enumerate.hpp"

#include <stdexcept>

#include "ldpsim/core/errors.hpp"

namespace ldpsim {
namespace {

template <class Name>
void check_law(double p, const Name& who) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw LdpError(who() + " produced an invalid bit probability");
  }
}

class TwoPartyWalker {
 public:
  TwoPartyWalker(const Datum& alice, const Datum& bob,
                 const std::function<void(const TwoPartyPath&)>& fn,
                 std::uint64_t max_paths)
      : alice_(alice), bob_(bob), fn_(fn), max_paths_(max_paths) {}

  // Takes ownership of p; the last viable branch reuses it.
  void go(std::unique_ptr<TwoPartyProtocol> p, double prob) {
    if (++visited_ > max_paths_) {
      throw SizeGuardError("enumeration exceeded " +
                           std::to_string(max_paths_) + " nodes");
    }
    TwoPartyAction action = p->next_action();
    if (auto* halt = std::get_if<HaltAction>(&action)) {
      path_.probability = prob;
      path_.view = p->view();
      path_.answer = std::move(halt->answer);
      fn_(path_);
      return;
    }
    double p_one;
    bool is_send = false;
    if (auto* coin = std::get_if<CoinAction>(&action)) {
      p_one = coin->probability_of_one;
      check_law(p_one, [&] { return p->name(); });
    } else {
      if (path_.received.size() >= p->max_bits()) {
        throw LdpError(p->name() + " exceeded its bit budget");
      }
      is_send = true;
      const Side sender = std::get<SendAction>(action).sender;
      const double s =
          p->send_probability(sender == Side::kAlice ? alice_ : bob_);
      check_law(s, [&] { return p->name(); });
      const double f = p->channel().flip_probability();
      p_one = s * (1.0 - f) + (1.0 - s) * f;
      path_.senders.push_back(sender);
    }
    const bool both = p_one > 0.0 && p_one < 1.0;
    for (int b = 0; b < 2; ++b) {
      const double pb = b ? p_one : 1.0 - p_one;
      if (pb <= 0.0) continue;
      std::unique_ptr<TwoPartyProtocol> branch =
          (both && b == 0) ? p->clone() : std::move(p);
      if (is_send) {
        branch->observe_bit(static_cast<std::uint8_t>(b));
        path_.received.push_back(static_cast<char>('0' + b));
      } else {
        branch->observe_coin(b == 1);
      }
      go(std::move(branch), prob * pb);
      if (is_send) path_.received.pop_back();
    }
    if (is_send) path_.senders.pop_back();
  }

 private:
  const Datum& alice_;
  const Datum& bob_;
  const std::function<void(const TwoPartyPath&)>& fn_;
  std::uint64_t max_paths_;
  std::uint64_t visited_ = 0;
  TwoPartyPath path_;
};

struct LdpState {
  std::unique_ptr<ProtocolDriver> driver;
  Transcript transcript;
  std::vector<std::int8_t> sides;          // -1 = not drawn yet
  std::vector<std::int64_t> last_round;    // -1 = never queried
  std::string view;
  double prob = 1.0;

  LdpState copy() const {
    return LdpState{driver->clone(), transcript, sides, last_round, view, prob};
  }
};

class LdpWalker {
 public:
  LdpWalker(PayloadPtr alice, PayloadPtr bob, InteractivityMode mode,
            const EnumerateOptions& options, std::uint32_t user_limit,
            TranscriptDistribution& out)
      : data_{Datum{Side::kAlice, std::move(alice)},
              Datum{Side::kBob, std::move(bob)}},
        mode_(mode),
        options_(options),
        user_limit_(user_limit),
        out_(out) {}

  void step(LdpState s) {
    tick();
    DriverStep next = s.driver->next(s.transcript);
    if (auto* halt = std::get_if<Halt>(&next)) {
      out_.add(outcome_key(options_.key, s.view, halt->answer), s.prob);
      return;
    }
    if (auto* coin = std::get_if<CoinRequest>(&next)) {
      const double c = coin->probability_of_one;
      check_law(c, [&] { return s.driver->name(); });
      if (c > 0.0 && c < 1.0) {
        LdpState zero = s.copy();
        zero.prob *= 1.0 - c;
        zero.driver->on_public_coin(false);
        step(std::move(zero));
        s.prob *= c;
        s.driver->on_public_coin(true);
      } else {
        s.driver->on_public_coin(c >= 1.0);
      }
      step(std::move(s));
      return;
    }
    auto request = std::make_shared<const RoundRequest>(
        std::move(std::get<RoundRequest>(next)));
    admit(s, *request);
    std::vector<std::uint8_t> outputs;
    outputs.reserve(request->users.size());
    user(std::move(s), request, 0, outputs);
  }

 private:
  void tick() {
    if (++visited_ > options_.max_paths) {
      throw SizeGuardError("enumeration exceeded " +
                           std::to_string(options_.max_paths) + " nodes");
    }
  }

  void admit(LdpState& s, const RoundRequest& request) {
    const std::uint64_t round = s.transcript.rounds().size();
    const std::size_t n = request.users.size();
    if (n == 0) throw std::invalid_argument("round with no users");
    if (request.randomizers.size() != 1 && request.randomizers.size() != n) {
      throw std::invalid_argument("round needs one randomizer or one per user");
    }
    if (mode_ == InteractivityMode::kNoninteractive && round > 0) {
      throw InteractivityViolation(request.users[0], round,
                                   "noninteractive protocol used a 2nd round");
    }
    for (UserId u : request.users) {
      if (u >= user_limit_) {
        throw LdpError("user " + std::to_string(u) + " outside population");
      }
      if (u >= s.last_round.size()) {
        s.last_round.resize(u + 1, -1);
        s.sides.resize(u + 1, -1);
      }
      std::int64_t& last = s.last_round[u];
      if (last == static_cast<std::int64_t>(round)) {
        throw InteractivityViolation(u, round, "user queried twice in a round");
      }
      if (last >= 0 && mode_ == InteractivityMode::kSequential) {
        throw InteractivityViolation(u, round,
                                     "sequential protocol reused a user");
      }
      last = static_cast<std::int64_t>(round);
    }
  }

  void user(LdpState s, const std::shared_ptr<const RoundRequest>& request,
            std::size_t i, std::vector<std::uint8_t>& outputs) {
    tick();
    if (i == request->users.size()) {
      finish(std::move(s), *request, outputs);
      return;
    }
    const UserId u = request->users[i];
    const Randomizer& r = request->randomizers.size() == 1
                              ? *request->randomizers[0]
                              : *request->randomizers[i];
    auto law = [&](int side) {
      double p = r.probability_of_one(data_[side]);
      check_law(p, [&] { return r.descriptor(); });
      return p;
    };
    if (s.sides[u] < 0 && mode_ != InteractivityMode::kSequential) {
      LdpState other = s.copy();
      other.sides[u] = 1;
      other.prob *= 0.5;
      user(std::move(other), request, i, outputs);
      s.sides[u] = 0;
      s.prob *= 0.5;
    }
    const double p_one = s.sides[u] < 0 ? 0.5 * (law(0) + law(1))
                                        : law(s.sides[u]);
    const bool both = p_one > 0.0 && p_one < 1.0;
    for (int b = 0; b < 2; ++b) {
      const double pb = b ? p_one : 1.0 - p_one;
      if (pb <= 0.0) continue;
      LdpState branch = (both && b == 0) ? s.copy() : std::move(s);
      branch.prob *= pb;
      outputs.push_back(static_cast<std::uint8_t>(b));
      user(std::move(branch), request, i + 1, outputs);
      outputs.pop_back();
    }
  }

  void finish(LdpState s, const RoundRequest& request,
              const std::vector<std::uint8_t>& outputs) {
    RoundRecord record;
    record.round_index = s.transcript.rounds().size();
    record.users = request.users;
    const std::size_t n = request.users.size();
    for (std::size_t i = 0; i < n; ++i) {
      const Randomizer& r = request.randomizers.size() == 1
                                ? *request.randomizers[0]
                                : *request.randomizers[i];
      record.randomizer_ids.push_back(
          static_cast<RandomizerId>(request.randomizers.size() == 1 ? 0 : i));
      record.epsilons.push_back(r.epsilon());
      s.view.push_back(static_cast<char>('0' + outputs[i]));
    }
    record.outputs = outputs;
    s.transcript.append(std::move(record));
    step(std::move(s));
  }

  Datum data_[2];
  InteractivityMode mode_;
  const EnumerateOptions& options_;
  std::uint32_t user_limit_;
  TranscriptDistribution& out_;
  std::uint64_t visited_ = 0;
};

}  // namespace

std::string outcome_key(OutcomeKey mode, const std::string& view,
                        const Answer& answer) {
  switch (mode) {
    case OutcomeKey::kView:
      return view;
    case OutcomeKey::kAnswer:
      return describe(answer);
    case OutcomeKey::kViewAndAnswer:
      return view + "#" + describe(answer);
  }
  return view;
}

void visit_two_party_paths(const TwoPartyProtocol& p, const Datum& alice,
                           const Datum& bob,
                           const std::function<void(const TwoPartyPath&)>& fn,
                           std::uint64_t max_paths) {
  TwoPartyWalker walker(alice, bob, fn, max_paths);
  walker.go(p.clone(), 1.0);
}

TranscriptDistribution enumerate_transcript_distribution(
    const TwoPartyProtocol& p, const Datum& alice, const Datum& bob,
    const EnumerateOptions& options) {
  TranscriptDistribution d;
  visit_two_party_paths(
      p, alice, bob,
      [&](const TwoPartyPath& path) {
        d.add(outcome_key(options.key, path.view, path.answer),
              path.probability);
      },
      options.max_paths);
  return d;
}

TranscriptDistribution enumerate_ldp_distribution(
    const ProtocolDriver& driver, PayloadPtr alice_payload,
    PayloadPtr bob_payload, InteractivityMode mode,
    const EnumerateOptions& options, std::uint32_t user_limit) {
  TranscriptDistribution d;
  LdpWalker walker(std::move(alice_payload), std::move(bob_payload), mode,
                   options, user_limit, d);
  LdpState start;
  start.driver = driver.clone();
  walker.step(std::move(start));
  return d;
}

}  // namespace ldpsim
