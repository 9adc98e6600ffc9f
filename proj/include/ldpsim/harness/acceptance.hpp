#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace ldpsim {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0.0;
  double limit_seconds = 0.0;
};

struct AcceptanceOptions {
  std::uint64_t seed = 20240601;
  std::vector<int> only;  // empty = all
  std::function<void(const CriterionResult&)> on_result;
};

std::vector<int> acceptance_ids();
std::string criterion_name(int id);
// A criterion passes only when its check holds and it finished within its
// time limit. Exceptions become failures.
CriterionResult run_criterion(int id, std::uint64_t seed);
std::vector<CriterionResult> run_acceptance_suite(
    const AcceptanceOptions& options = {});
// "PASS  3 hlsolver-accuracy  <detail>  (1.2 s / 300 s)"
std::string format_criterion(const CriterionResult& result);

}  // namespace ldpsim
