#include "ldpsim/core/transcript.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

#include "ldpsim/core/driver.hpp"
#include "ldpsim/core/errors.hpp"

namespace ldpsim {

double bernoulli_max_log_ratio(double p, double q) {
  auto side = [](double a, double b) {
    if (a == b) return 0.0;
    if (a == 0.0 || b == 0.0) return std::numeric_limits<double>::infinity();
    return std::abs(std::log(a) - std::log(b));
  };
  return std::max(side(p, q), side(1.0 - p, 1.0 - q));
}

std::array<double, 2> bernoulli_directed_log_ratios(double p, double q) {
  // log(a/b) with log(0/0) = 0.
  auto up = [](double a, double b) {
    if (a == b) return 0.0;
    if (a == 0.0) return -std::numeric_limits<double>::infinity();
    if (b == 0.0) return std::numeric_limits<double>::infinity();
    return std::log(a) - std::log(b);
  };
  const double one = up(p, q), zero = up(1.0 - p, 1.0 - q);
  return {std::max({0.0, one, zero}), std::max({0.0, -one, -zero})};
}

std::array<double, 2> Randomizer::directed_log_ratios(const Datum& a,
                                                      const Datum& b) const {
  return bernoulli_directed_log_ratios(probability_of_one(a),
                                       probability_of_one(b));
}

double Randomizer::max_log_ratio(const Datum& a, const Datum& b) const {
  return bernoulli_max_log_ratio(probability_of_one(a), probability_of_one(b));
}

void ProtocolDriver::on_public_coin(bool) {
  throw LdpError(name() + " received a public coin it did not request");
}

std::string to_string(AnswerStatus status) {
  switch (status) {
    case AnswerStatus::kOk:
      return "ok";
    case AnswerStatus::kDecodeFailure:
      return "decode-failure";
    case AnswerStatus::kAborted:
      return "aborted";
  }
  return "unknown";
}

std::string describe(const Answer& answer) {
  std::string text = to_string(answer.status) + "[";
  for (std::size_t i = 0; i < answer.value.size(); ++i) {
    if (i) text += ",";
    text += std::to_string(answer.value[i]);
  }
  return text + "]";
}

std::uint64_t RoundRecord::count_ones() const {
  return std::accumulate(outputs.begin(), outputs.end(), std::uint64_t{0});
}

void RoundRecord::validate() const {
  const std::size_t n = users.size();
  if (n == 0) throw std::invalid_argument("round record has no users");
  if (randomizer_ids.size() != n || epsilons.size() != n ||
      outputs.size() != n) {
    throw std::invalid_argument("round record lists differ in length");
  }
  for (double eps : epsilons) {
    if (!(eps > 0.0) || !std::isfinite(eps)) {
      throw std::invalid_argument("round record epsilon must be positive");
    }
  }
  for (auto bit : outputs) {
    if (bit > 1) throw std::invalid_argument("round record output not a bit");
  }
}

void Transcript::append(RoundRecord record) {
  record.validate();
  if (record.round_index != rounds_.size()) {
    throw std::invalid_argument("round index " +
                                std::to_string(record.round_index) +
                                " is not consecutive");
  }
  rounds_.push_back(std::move(record));
}

std::size_t sample_complexity(const Transcript& transcript) {
  std::vector<UserId> ids;
  for (const auto& round : transcript.rounds()) {
    ids.insert(ids.end(), round.users.begin(), round.users.end());
  }
  std::sort(ids.begin(), ids.end());
  return static_cast<std::size_t>(
      std::unique(ids.begin(), ids.end()) - ids.begin());
}

std::size_t round_complexity(const Transcript& transcript) {
  return transcript.rounds().size();
}

RandomizerId QueryLog::intern(const RandomizerPtr& randomizer) {
  auto it = index_.find(randomizer.get());
  if (it != index_.end()) return it->second;
  const auto id = add(randomizer);
  index_.emplace(randomizer.get(), id);
  return id;
}

RandomizerId QueryLog::add(RandomizerPtr randomizer) {
  if (!randomizer) throw std::invalid_argument("null randomizer");
  entries_.push_back(std::move(randomizer));
  return static_cast<RandomizerId>(entries_.size() - 1);
}

const Randomizer& QueryLog::at(RandomizerId id) const { return *pointer(id); }

const RandomizerPtr& QueryLog::pointer(RandomizerId id) const {
  if (!contains(id)) {
    throw AuditError("query log has no entry for randomizer id " +
                     std::to_string(id));
  }
  return entries_[id];
}

}  // namespace ldpsim
