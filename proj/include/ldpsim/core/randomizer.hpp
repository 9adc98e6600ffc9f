#pragma once

#include <array>
#include <memory>
#include <string>

#include "ldpsim/core/datum.hpp"

namespace ldpsim {

// A single-bit local randomizer: a distribution over {0, 1} that depends on
// one user's datum.
class Randomizer {
 public:
  virtual ~Randomizer() = default;

  // Declared per-call privacy budget.
  virtual double epsilon() const = 0;
  virtual double probability_of_one(const Datum& datum) const = 0;
  virtual std::string descriptor() const = 0;

  // max over outputs y of |log P(y | a) - log P(y | b)|. The default derives
  // it from probability_of_one; subclasses with closed forms override.
  virtual double max_log_ratio(const Datum& a, const Datum& b) const;
  // {max_y log P(y|a)/P(y|b), max_y log P(y|b)/P(y|a)}, both >= 0. Summing
  // each direction over conditionally independent queries gives the exact
  // worst-case realization.
  virtual std::array<double, 2> directed_log_ratios(const Datum& a,
                                                    const Datum& b) const;
};

using RandomizerPtr = std::shared_ptr<const Randomizer>;

// Exact worst-case log ratio between two Bernoulli laws.
double bernoulli_max_log_ratio(double p, double q);
std::array<double, 2> bernoulli_directed_log_ratios(double p, double q);

}  // namespace ldpsim
