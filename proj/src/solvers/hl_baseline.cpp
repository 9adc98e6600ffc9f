#include "ldpsim/solvers/hl_baseline.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

#include "ldpsim/randomizers/randomized_response.hpp"

namespace ldpsim {

SequentialHLBaselineDriver::SequentialHLBaselineDriver(
    HLShape shape, std::uint32_t per_query_group, double epsilon,
    double threshold)
    : shape_(shape),
      group_(per_query_group),
      epsilon_(epsilon),
      walk_(shape, threshold) {
  if (group_ < 1) throw std::invalid_argument("baseline: group must be >= 1");
  if (!(epsilon > 0) || !std::isfinite(epsilon)) {
    throw std::invalid_argument("baseline: epsilon must be positive");
  }
}

std::uint64_t SequentialHLBaselineDriver::max_users() const {
  return std::uint64_t{shape_.branching} * shape_.num_layers * group_;
}

DriverStep SequentialHLBaselineDriver::next(const Transcript& prefix) {
  if (awaiting_) {
    const RoundRecord& last = prefix.back();
    walk_.observe(debias(last.count_ones(), last.size(), epsilon_));
    awaiting_ = false;
  }
  if (walk_.done()) {
    Answer answer;
    for (std::uint32_t c : walk_.vertex()) answer.value.push_back(c);
    return Halt{std::move(answer)};
  }
  RoundRequest request;
  request.users.resize(group_);
  std::iota(request.users.begin(), request.users.end(), next_user_);
  next_user_ += group_;
  request.randomizers.push_back(
      std::make_shared<RRQuery>(epsilon_, walk_.pending_predicate()));
  awaiting_ = true;
  return request;
}

std::unique_ptr<ProtocolDriver> SequentialHLBaselineDriver::clone() const {
  return std::make_unique<SequentialHLBaselineDriver>(*this);
}

std::unique_ptr<ProtocolDriver> naive_sequential_hl_baseline(
    HLShape shape, std::uint32_t per_query_group, double epsilon) {
  return std::make_unique<SequentialHLBaselineDriver>(shape, per_query_group,
                                                      epsilon);
}

}  // namespace ldpsim
