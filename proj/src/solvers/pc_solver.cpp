#include "ldpsim/solvers/pc_solver.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

#include "ldpsim/problems/pointer_chasing.hpp"
#include "ldpsim/randomizers/randomized_response.hpp"

namespace ldpsim {

void PCSolverConfig::validate() const {
  if (!(epsilon > 0) || !std::isfinite(epsilon)) {
    throw std::invalid_argument("pcsolver: epsilon must be positive");
  }
  if (m < 1) throw std::invalid_argument("pcsolver: m must be >= 1");
  if (!(threshold > 0 && threshold < 1)) {
    throw std::invalid_argument("pcsolver: threshold must be in (0, 1)");
  }
}

PCSolverDriver::PCSolverDriver(PCShape shape, PCSolverConfig config)
    : shape_(shape), config_(config), width_(0) {
  if (shape.k < 1 || shape.l < 2) {
    throw std::invalid_argument("pcsolver: need k >= 1 and l >= 2");
  }
  config_.validate();
  width_ = pointer_width(shape.l);
}

std::uint64_t PCSolverDriver::users_required() const {
  return std::uint64_t{phases()} * width_ * config_.m;
}

DriverStep PCSolverDriver::next(const Transcript& prefix) {
  if (awaiting_) {
    awaiting_ = false;
    const RoundRecord& last = prefix.back();
    double estimate = debias(last.count_ones(), last.size(), config_.epsilon);
    code_ = (code_ << 1) | (estimate > config_.threshold ? 1u : 0u);
    if (++bit_ == width_) {
      std::uint64_t value = std::uint64_t{code_} + 1;
      if (value > shape_.l) {
        return Halt{Answer{AnswerStatus::kDecodeFailure,
                           {static_cast<std::int64_t>(value)}}};
      }
      location_ = static_cast<std::uint32_t>(value);
      side_ = other(side_);
      code_ = 0;
      bit_ = 0;
      ++phase_;
    }
  }
  if (phase_ == phases()) {
    return Halt{Answer{AnswerStatus::kOk, {location_}}};
  }
  RoundRequest request;
  request.users.resize(config_.m);
  std::iota(request.users.begin(), request.users.end(), next_user_);
  next_user_ += config_.m;
  request.randomizers.push_back(std::make_shared<RRQuery>(
      config_.epsilon,
      std::make_shared<PcBitPredicate>(side_, location_, bit_, width_)));
  awaiting_ = true;
  return request;
}

std::unique_ptr<ProtocolDriver> PCSolverDriver::clone() const {
  return std::make_unique<PCSolverDriver>(*this);
}

std::unique_ptr<ProtocolDriver> pcsolver_drive(PCShape shape,
                                               const PCSolverConfig& config) {
  return std::make_unique<PCSolverDriver>(shape, config);
}

}  // namespace ldpsim
