#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <random>
#include <string>

#include "ldpsim/core/randomizer.hpp"

namespace ldpsim {

// e^eps/(e^eps+1) for vote 1, 1/(e^eps+1) for vote 0.
// Throws std::invalid_argument unless epsilon > 0 and vote is 0 or 1.
double rr_param(int vote, double epsilon);

struct RRResponse {
  std::uint8_t bit = 0;
  double bernoulli_param = 0.5;
};

RRResponse rr_sample(int vote, double epsilon, std::mt19937_64& rng);

// Unbiased estimate of the fraction of 1-votes among n randomized-response
// reports whose bits sum to sum_y:
//   (1/n) * (e^eps+1)/(e^eps-1) * (sum_y - n/(e^eps+1)).
// Not clamped to [0, 1].
double debias(std::uint64_t sum_y, std::uint64_t n, double epsilon);

// Half-width r such that |y - debiased| <= r with probability >= 1 - beta:
//   (eps+2)/(eps*sqrt(2)) * sqrt(ln(4/beta)/n).
double debias_radius(double epsilon, std::uint64_t n, double beta);

// A boolean property of a datum, such as "my hidden layer is 3 and vertex v
// points at child 1". The sentinel datum satisfies no predicate.
class Predicate {
 public:
  virtual ~Predicate() = default;
  virtual bool evaluate(const Datum& datum) const = 0;
  virtual std::string descriptor() const = 0;
};

using PredicatePtr = std::shared_ptr<const Predicate>;

// Randomized response applied to a predicate of the datum.
class RRQuery final : public Randomizer {
 public:
  RRQuery(double epsilon, PredicatePtr predicate);

  double epsilon() const override { return epsilon_; }
  const Predicate& predicate() const { return *predicate_; }
  const PredicatePtr& predicate_ptr() const { return predicate_; }
  bool vote(const Datum& datum) const { return predicate_->evaluate(datum); }

  double probability_of_one(const Datum& datum) const override;
  std::string descriptor() const override;
  // epsilon when the predicate separates a and b, otherwise 0.
  double max_log_ratio(const Datum& a, const Datum& b) const override;
  std::array<double, 2> directed_log_ratios(const Datum& a,
                                            const Datum& b) const override;

 private:
  double epsilon_;
  PredicatePtr predicate_;
};

// Outputs 1 with a fixed probability regardless of the datum.
class ConstantRandomizer final : public Randomizer {
 public:
  ConstantRandomizer(double probability_of_one, double declared_epsilon);

  double epsilon() const override { return epsilon_; }
  double probability_of_one(const Datum&) const override { return p_; }
  std::string descriptor() const override;
  double max_log_ratio(const Datum&, const Datum&) const override { return 0; }
  std::array<double, 2> directed_log_ratios(const Datum&,
                                            const Datum&) const override {
    return {0.0, 0.0};
  }

 private:
  double p_;
  double epsilon_;
};

// Arbitrary single-bit law given by a function of the datum.
class LawRandomizer final : public Randomizer {
 public:
  using Law = std::function<double(const Datum&)>;

  LawRandomizer(double declared_epsilon, Law law, std::string descriptor);

  double epsilon() const override { return epsilon_; }
  double probability_of_one(const Datum& datum) const override;
  std::string descriptor() const override { return descriptor_; }

 private:
  double epsilon_;
  Law law_;
  std::string descriptor_;
};

// Predicate "datum side equals `side`".
class SidePredicate final : public Predicate {
 public:
  explicit SidePredicate(Side side) : side_(side) {}
  bool evaluate(const Datum& datum) const override;
  std::string descriptor() const override;

 private:
  Side side_;
};

// Predicate "scalar payload == value".
class ScalarEqualsPredicate final : public Predicate {
 public:
  explicit ScalarEqualsPredicate(std::int64_t value) : value_(value) {}
  bool evaluate(const Datum& datum) const override;
  std::string descriptor() const override;

 private:
  std::int64_t value_;
};

}  // namespace ldpsim
