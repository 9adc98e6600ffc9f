#pragma once

#include <cstdint>
#include <random>
#include <string>

namespace ldpsim {

enum class ChannelKind : std::uint8_t { kNoiseless, kBsc };

// A bit channel. The BSC flips each bit independently with probability
// `crossover` and always feeds the received bit back to the sender. The
// channel's advantage is 1/2 - crossover; only the flip probability is
// stored.
struct ChannelSpec {
  ChannelKind kind = ChannelKind::kNoiseless;
  double crossover = 0.0;

  static ChannelSpec noiseless() { return {}; }
  static ChannelSpec bsc(double flip_probability);
  static ChannelSpec bsc_with_advantage(double advantage);

  double advantage() const { return 0.5 - crossover; }
  // Flip probability seen by a bit, 0 for the noiseless channel.
  double flip_probability() const {
    return kind == ChannelKind::kBsc ? crossover : 0.0;
  }
  // Throws std::invalid_argument unless 0 <= crossover < 1/2.
  void validate() const;
  bool operator==(const ChannelSpec&) const = default;
};

std::string describe(const ChannelSpec& spec);

struct Transmission {
  std::uint8_t received = 0;
  std::uint8_t feedback = 0;  // what the sender sees; always == received
};

// Throws std::invalid_argument for a noiseless spec.
Transmission bsc_transmit(std::uint8_t bit, const ChannelSpec& spec,
                          std::mt19937_64& rng);

// Advantage (e^eps - 1) / (4 (e^eps + 1)) of the channel a one-user
// randomized response bit emulates when the user's side is a fair coin.
double lift_crossover(double epsilon);
// Advantage (e^eps - 1) / (2 (e^eps + 1)), twice lift_crossover.
double lower_crossover(double epsilon);

// Sends each bit m times over `inner` and takes the majority. Returns the
// spec whose flip probability is P[Bin(m, inner flip) > m/2].
// Throws std::invalid_argument for even m or a noiseless inner channel.
ChannelSpec majority_amplify(const ChannelSpec& inner, std::uint32_t m);

class MajorityChannel {
 public:
  MajorityChannel(ChannelSpec inner, std::uint32_t m);

  const ChannelSpec& inner() const { return inner_; }
  std::uint32_t repetitions() const { return m_; }
  ChannelSpec effective() const { return effective_; }
  Transmission transmit(std::uint8_t bit, std::mt19937_64& rng) const;

 private:
  ChannelSpec inner_;
  std::uint32_t m_;
  ChannelSpec effective_;
};

}  // namespace ldpsim
