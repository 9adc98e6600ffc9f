#pragma once

#include <cstdint>
#include <memory>

#include "ldpsim/core/driver.hpp"
#include "ldpsim/core/datum.hpp"

namespace ldpsim {

struct PCShape {
  std::uint32_t k = 1;
  std::uint32_t l = 2;
};

struct PCSolverConfig {
  double epsilon = 1.0;  // full budget, spent once per user
  std::uint32_t m = 1;   // users per bit query
  double threshold = 0.15;

  void validate() const;
};

// Sequentially interactive pointer chasing solver. Tracks (side, location)
// starting from (Alice, 1) and dereferences k+1 times, so it returns v_k of
// the chain v_0 = a[1], v_1 = b[v_0], ... Each dereference reads the
// ceil(log2 l)-bit big-endian code of (value - 1) one bit per round, each
// round asking m fresh users. A bit is 1 iff the debiased vote is strictly
// above the threshold.
class PCSolverDriver final : public ProtocolDriver {
 public:
  PCSolverDriver(PCShape shape, PCSolverConfig config);

  DriverStep next(const Transcript& prefix) override;
  std::unique_ptr<ProtocolDriver> clone() const override;
  std::string name() const override { return "pcsolver"; }

  std::uint32_t width() const { return width_; }
  std::uint32_t phases() const { return shape_.k + 1; }
  // (k+1) * ceil(log2 l) * m.
  std::uint64_t users_required() const;

 private:
  PCShape shape_;
  PCSolverConfig config_;
  std::uint32_t width_;
  Side side_ = Side::kAlice;
  std::uint32_t location_ = 1;
  std::uint32_t phase_ = 0;
  std::uint32_t bit_ = 0;
  std::uint32_t code_ = 0;
  UserId next_user_ = 0;
  bool awaiting_ = false;
};

std::unique_ptr<ProtocolDriver> pcsolver_drive(PCShape shape,
                                               const PCSolverConfig& config);

}  // namespace ldpsim
