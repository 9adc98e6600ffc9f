#include "ldpsim/core/population.hpp"

#include <algorithm>
#include <stdexcept>

#include "ldpsim/core/rng.hpp"

namespace ldpsim {

Population::Population(std::vector<Side> sides, PayloadPtr alice,
                       PayloadPtr bob, std::uint64_t seed)
    : sides_(std::move(sides)),
      alice_(std::move(alice)),
      bob_(std::move(bob)),
      seed_(seed) {}

Datum Population::datum(UserId user) const { return datum_for(sides_[user]); }

Datum Population::datum_for(Side side) const {
  return Datum{side, side == Side::kAlice ? alice_ : bob_};
}

std::size_t Population::count(Side side) const {
  return static_cast<std::size_t>(
      std::count(sides_.begin(), sides_.end(), side));
}

bool Population::operator==(const Population& other) const {
  return sides_ == other.sides_ && alice_ == other.alice_ &&
         bob_ == other.bob_ && seed_ == other.seed_;
}

Population sample_population(std::size_t n, PayloadPtr alice_payload,
                             PayloadPtr bob_payload, std::uint64_t seed) {
  if (n == 0) throw std::invalid_argument("population size must be >= 1");
  std::vector<Side> sides(n);
  const std::uint64_t stream = derive_seed(seed, kPopulationStream);
  for (std::size_t i = 0; i < n; ++i) {
    sides[i] = (mix64(stream + i) >> 63) ? Side::kBob : Side::kAlice;
  }
  return Population(std::move(sides), std::move(alice_payload),
                    std::move(bob_payload), seed);
}

}  // namespace ldpsim
