#pragma once

#include <cstdint>
#include <random>

namespace ldpsim {

// All randomness in the simulator descends from 64-bit master seeds through
// derive_seed(). Streams are identified by a tag and an index so that every
// consumer gets an independent, replayable substream:
//
//   trial seed       = derive_seed(master, kTrialStream, trial_index)
//   instance seed    = derive_seed(trial, kInstanceStream)
//   population seed  = derive_seed(trial, kPopulationStream)
//   execution seed   = derive_seed(trial, kExecutionStream)
//   public coins     = PublicStream(derive_seed(execution, kPublicStream))
//   user randomness  = user_uniform(derive_seed(execution, kUserStream),
//                                   user_id, round_index)
//
// User randomness is counter based, so the bit a user publishes in a round
// does not depend on the order in which users of that round are processed.
enum StreamTag : std::uint64_t {
  kPublicStream = 0x7075626c6963ULL,
  kUserStream = 0x75736572ULL,
  kPopulationStream = 0x706f70ULL,
  kInstanceStream = 0x696e7374ULL,
  kExecutionStream = 0x65786563ULL,
  kTrialStream = 0x747269616cULL,
  kLabelStream = 0x6c6162656cULL,
};

using PublicStream = std::mt19937_64;

// splitmix64 finalizer.
constexpr std::uint64_t mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

constexpr std::uint64_t derive_seed(std::uint64_t master, std::uint64_t tag,
                                    std::uint64_t index = 0) {
  return mix64(mix64(master ^ mix64(tag)) + index);
}

// Uniform double in [0, 1) built from the top 53 bits of a 64-bit word.
constexpr double to_unit_interval(std::uint64_t bits) {
  return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

constexpr double user_uniform(std::uint64_t user_seed, std::uint32_t user,
                              std::uint64_t round) {
  return to_unit_interval(
      mix64(mix64(user_seed + user) ^ (round * 0xd1b54a32d192ed03ULL)));
}

}  // namespace ldpsim
