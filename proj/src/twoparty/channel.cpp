#include "ldpsim/twoparty/channel.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace ldpsim {

ChannelSpec ChannelSpec::bsc(double flip_probability) {
  ChannelSpec spec{ChannelKind::kBsc, flip_probability};
  spec.validate();
  return spec;
}

ChannelSpec ChannelSpec::bsc_with_advantage(double advantage) {
  return bsc(0.5 - advantage);
}

void ChannelSpec::validate() const {
  if (kind == ChannelKind::kNoiseless) return;
  if (!(crossover >= 0.0 && crossover < 0.5)) {
    throw std::invalid_argument("bsc crossover must lie in [0, 1/2)");
  }
}

std::string describe(const ChannelSpec& spec) {
  if (spec.kind == ChannelKind::kNoiseless) return "noiseless";
  char buf[64];
  std::snprintf(buf, sizeof buf, "bsc(flip=%.17g)", spec.crossover);
  return buf;
}

Transmission bsc_transmit(std::uint8_t bit, const ChannelSpec& spec,
                          std::mt19937_64& rng) {
  if (spec.kind != ChannelKind::kBsc) {
    throw std::invalid_argument("bsc_transmit needs a BSC spec");
  }
  spec.validate();
  std::bernoulli_distribution flip(spec.crossover);
  std::uint8_t received = (bit & 1u) ^ (flip(rng) ? 1u : 0u);
  return {received, received};
}

double lift_crossover(double epsilon) {
  if (!(epsilon > 0)) throw std::invalid_argument("epsilon must be positive");
  // expm1 keeps precision for small epsilon.
  return std::expm1(epsilon) / (4.0 * (std::exp(epsilon) + 1.0));
}

double lower_crossover(double epsilon) {
  if (!(epsilon > 0)) throw std::invalid_argument("epsilon must be positive");
  return std::expm1(epsilon) / (2.0 * (std::exp(epsilon) + 1.0));
}

ChannelSpec majority_amplify(const ChannelSpec& inner, std::uint32_t m) {
  if (m % 2 == 0) throw std::invalid_argument("majority needs odd m");
  if (inner.kind != ChannelKind::kBsc) {
    throw std::invalid_argument("majority_amplify needs a BSC");
  }
  inner.validate();
  if (m == 1) return inner;
  const double f = inner.crossover;
  // Tail sum of C(m, k) f^k (1-f)^(m-k) for k > m/2.
  double tail = 0.0;
  double choose = 1.0;  // C(m, k), updated incrementally
  for (std::uint32_t k = 0; k <= m; ++k) {
    if (k > 0) choose = choose * (m - k + 1) / k;
    if (2 * k > m) {
      tail += choose * std::pow(f, k) * std::pow(1.0 - f, m - k);
    }
  }
  ChannelSpec out{ChannelKind::kBsc, tail};
  out.validate();
  return out;
}

MajorityChannel::MajorityChannel(ChannelSpec inner, std::uint32_t m)
    : inner_(inner), m_(m), effective_(majority_amplify(inner, m)) {}

Transmission MajorityChannel::transmit(std::uint8_t bit,
                                       std::mt19937_64& rng) const {
  std::uint32_t ones = 0;
  for (std::uint32_t i = 0; i < m_; ++i) {
    ones += bsc_transmit(bit, inner_, rng).received;
  }
  std::uint8_t decoded = 2 * ones > m_ ? 1 : 0;
  return {decoded, decoded};
}

}  // namespace ldpsim
