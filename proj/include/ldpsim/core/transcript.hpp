#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <unordered_map>
#include <vector>

#include "ldpsim/core/randomizer.hpp"

namespace ldpsim {

using UserId = std::uint32_t;
using RandomizerId = std::uint32_t;

// One round of a locally private interaction. The privacy parameter delta is
// always zero here and has no field.
struct RoundRecord {
  std::uint64_t round_index = 0;
  std::vector<UserId> users;
  std::vector<RandomizerId> randomizer_ids;
  std::vector<double> epsilons;
  std::vector<std::uint8_t> outputs;

  std::size_t size() const { return users.size(); }
  std::uint64_t count_ones() const;

  // Throws std::invalid_argument if the parallel lists disagree in length,
  // are empty, or carry an epsilon that is not strictly positive and finite.
  void validate() const;
  bool operator==(const RoundRecord&) const = default;
};

class Transcript {
 public:
  const std::vector<RoundRecord>& rounds() const { return rounds_; }
  bool empty() const { return rounds_.empty(); }
  const RoundRecord& back() const { return rounds_.back(); }

  // The record's round_index must equal the current round count.
  void append(RoundRecord record);

  bool operator==(const Transcript&) const = default;

 private:
  std::vector<RoundRecord> rounds_;
};

std::size_t sample_complexity(const Transcript& transcript);
std::size_t round_complexity(const Transcript& transcript);

// Maps the randomizer ids stored in a transcript back to the randomizers
// that produced each output.
class QueryLog {
 public:
  // Returns the id already assigned to this randomizer object, or a new one.
  RandomizerId intern(const RandomizerPtr& randomizer);
  // Adds a randomizer under the next id without deduplication.
  RandomizerId add(RandomizerPtr randomizer);

  bool contains(RandomizerId id) const { return id < entries_.size(); }
  // Throws AuditError for unknown ids.
  const Randomizer& at(RandomizerId id) const;
  const RandomizerPtr& pointer(RandomizerId id) const;
  std::size_t size() const { return entries_.size(); }

 private:
  std::vector<RandomizerPtr> entries_;
  std::unordered_map<const Randomizer*, RandomizerId> index_;
};

}  // namespace ldpsim
