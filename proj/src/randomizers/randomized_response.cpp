#include "ldpsim/randomizers/randomized_response.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace ldpsim {

namespace {

void require_positive_epsilon(double epsilon) {
  if (!(epsilon > 0.0) || !std::isfinite(epsilon)) {
    throw std::invalid_argument("epsilon must be positive and finite");
  }
}

std::string format_double(double value) {
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "%.17g", value);
  return buffer;
}

}  // namespace

double rr_param(int vote, double epsilon) {
  require_positive_epsilon(epsilon);
  if (vote != 0 && vote != 1) throw std::invalid_argument("vote must be 0/1");
  // 1/(1+e^-eps) avoids overflow for large budgets.
  const double high = 1.0 / (1.0 + std::exp(-epsilon));
  const double low = 1.0 / (1.0 + std::exp(epsilon));
  return vote == 1 ? high : low;
}

RRResponse rr_sample(int vote, double epsilon, std::mt19937_64& rng) {
  const double p = rr_param(vote, epsilon);
  std::bernoulli_distribution draw(p);
  return RRResponse{static_cast<std::uint8_t>(draw(rng) ? 1 : 0), p};
}

double debias(std::uint64_t sum_y, std::uint64_t n, double epsilon) {
  require_positive_epsilon(epsilon);
  if (n == 0) throw std::invalid_argument("debias needs n >= 1");
  if (sum_y > n) throw std::invalid_argument("debias needs sum_y <= n");
  const double e = std::exp(epsilon);
  const double nd = static_cast<double>(n);
  return (1.0 / nd) * ((e + 1.0) / (e - 1.0)) *
         (static_cast<double>(sum_y) - nd / (e + 1.0));
}

double debias_radius(double epsilon, std::uint64_t n, double beta) {
  require_positive_epsilon(epsilon);
  if (n == 0) throw std::invalid_argument("debias_radius needs n >= 1");
  if (!(beta > 0.0 && beta < 1.0)) {
    throw std::invalid_argument("beta must lie in (0, 1)");
  }
  return (epsilon + 2.0) / (epsilon * std::sqrt(2.0)) *
         std::sqrt(std::log(4.0 / beta) / static_cast<double>(n));
}

RRQuery::RRQuery(double epsilon, PredicatePtr predicate)
    : epsilon_(epsilon), predicate_(std::move(predicate)) {
  require_positive_epsilon(epsilon);
  if (!predicate_) throw std::invalid_argument("RRQuery needs a predicate");
}

double RRQuery::probability_of_one(const Datum& datum) const {
  return rr_param(vote(datum) ? 1 : 0, epsilon_);
}

std::string RRQuery::descriptor() const {
  return "rr(eps=" + format_double(epsilon_) + ";" + predicate_->descriptor() +
         ")";
}

double RRQuery::max_log_ratio(const Datum& a, const Datum& b) const {
  return vote(a) == vote(b) ? 0.0 : epsilon_;
}

std::array<double, 2> RRQuery::directed_log_ratios(const Datum& a,
                                                   const Datum& b) const {
  const double r = max_log_ratio(a, b);
  return {r, r};
}

ConstantRandomizer::ConstantRandomizer(double probability_of_one,
                                       double declared_epsilon)
    : p_(probability_of_one), epsilon_(declared_epsilon) {
  if (!(p_ >= 0.0 && p_ <= 1.0)) {
    throw std::invalid_argument("constant law must lie in [0, 1]");
  }
  require_positive_epsilon(declared_epsilon);
}

std::string ConstantRandomizer::descriptor() const {
  return "const(p=" + format_double(p_) + ";eps=" + format_double(epsilon_) +
         ")";
}

LawRandomizer::LawRandomizer(double declared_epsilon, Law law,
                             std::string descriptor)
    : epsilon_(declared_epsilon),
      law_(std::move(law)),
      descriptor_(std::move(descriptor)) {
  require_positive_epsilon(declared_epsilon);
}

double LawRandomizer::probability_of_one(const Datum& datum) const {
  return law_(datum);
}

bool SidePredicate::evaluate(const Datum& datum) const {
  return !datum.is_sentinel() && datum.side == side_;
}

std::string SidePredicate::descriptor() const {
  return "side(" + to_string(side_) + ")";
}

bool ScalarEqualsPredicate::evaluate(const Datum& datum) const {
  const auto* scalar = datum.payload_as<ScalarPayload>();
  return scalar != nullptr && scalar->value() == value_;
}

std::string ScalarEqualsPredicate::descriptor() const {
  return "scalar-eq(" + std::to_string(value_) + ")";
}

}  // namespace ldpsim
