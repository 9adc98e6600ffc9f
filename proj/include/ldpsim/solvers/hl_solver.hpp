#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "ldpsim/core/driver.hpp"
#include "ldpsim/core/population.hpp"
#include "ldpsim/core/transcript.hpp"
#include "ldpsim/solvers/hl_walk.hpp"

namespace ldpsim {

struct HLSolverConfig {
  double epsilon = 1.0;  // total budget; each query spends epsilon / 2
  std::uint32_t n = 1;
  double threshold = 0.2;

  double per_query_epsilon() const { return epsilon / 2.0; }
  // Throws std::invalid_argument.
  void validate() const;
};

// Fully interactive hidden layers solver. Every round queries all n users
// about one candidate edge; the walk descends on the debiased vote. A
// user's vote is true for at most one query per execution, which is what
// keeps the total privacy loss at 2 * (epsilon / 2).
class HLSolverDriver final : public ProtocolDriver {
 public:
  HLSolverDriver(HLShape shape, HLSolverConfig config);

  DriverStep next(const Transcript& prefix) override;
  std::unique_ptr<ProtocolDriver> clone() const override;
  std::string name() const override { return "hlsolver"; }

  const HiddenLayerWalk& walk() const { return walk_; }

 private:
  HLShape shape_;
  HLSolverConfig config_;
  HiddenLayerWalk walk_;
  std::shared_ptr<const std::vector<UserId>> users_;
  bool awaiting_ = false;
};

std::unique_ptr<ProtocolDriver> hlsolver_drive(HLShape shape,
                                               const HLSolverConfig& config);

// Largest number of randomized-response queries in one execution whose vote
// is true for a single user. Other randomizers are ignored. The hidden layers
// solver keeps this at most 1.
std::uint64_t max_true_votes(const Transcript& transcript,
                             const QueryLog& query_log,
                             const Population& population);

}  // namespace ldpsim
