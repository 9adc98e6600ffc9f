#pragma once

#include <cstdint>
#include <memory>

#include "ldpsim/core/driver.hpp"
#include "ldpsim/solvers/hl_walk.hpp"

namespace ldpsim {

// Sequentially interactive counterpart of the hidden layers solver: the same
// walk, but every (vertex, child) query goes to a fresh group of users, each
// answering once at `epsilon`. Used to exhibit the sample-complexity gap.
class SequentialHLBaselineDriver final : public ProtocolDriver {
 public:
  SequentialHLBaselineDriver(HLShape shape, std::uint32_t per_query_group,
                             double epsilon, double threshold = 0.2);

  DriverStep next(const Transcript& prefix) override;
  std::unique_ptr<ProtocolDriver> clone() const override;
  std::string name() const override { return "hl-sequential-baseline"; }

  const HiddenLayerWalk& walk() const { return walk_; }
  // Upper bound on users consumed: B * L * group.
  std::uint64_t max_users() const;

 private:
  HLShape shape_;
  std::uint32_t group_;
  double epsilon_;
  HiddenLayerWalk walk_;
  UserId next_user_ = 0;
  bool awaiting_ = false;
};

std::unique_ptr<ProtocolDriver> naive_sequential_hl_baseline(
    HLShape shape, std::uint32_t per_query_group, double epsilon);

}  // namespace ldpsim
