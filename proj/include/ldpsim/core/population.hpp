#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "ldpsim/core/datum.hpp"
#include "ldpsim/core/transcript.hpp"

namespace ldpsim {

// Users 0..n-1, each holding either the Alice payload or the Bob payload.
// Sides are independent fair coins derived from the seed.
class Population {
 public:
  Population(std::vector<Side> sides, PayloadPtr alice, PayloadPtr bob,
             std::uint64_t seed);

  std::size_t size() const { return sides_.size(); }
  bool contains(UserId user) const { return user < sides_.size(); }
  Side side(UserId user) const { return sides_[user]; }
  std::span<const Side> sides() const { return sides_; }
  Datum datum(UserId user) const;
  Datum datum_for(Side side) const;
  const PayloadPtr& alice_payload() const { return alice_; }
  const PayloadPtr& bob_payload() const { return bob_; }
  std::uint64_t seed() const { return seed_; }
  std::size_t count(Side side) const;

  bool operator==(const Population& other) const;

 private:
  std::vector<Side> sides_;
  PayloadPtr alice_;
  PayloadPtr bob_;
  std::uint64_t seed_;
};

// Throws std::invalid_argument when n == 0.
Population sample_population(std::size_t n, PayloadPtr alice_payload,
                             PayloadPtr bob_payload, std::uint64_t seed);

}  // namespace ldpsim
