#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "ldpsim/core/kernels.hpp"
#include "ldpsim/core/population.hpp"
#include "ldpsim/core/transcript.hpp"

namespace ldpsim {

// One response from a user's point of view: the randomizer that produced it
// and the realized bit.
struct UserResponse {
  const Randomizer* randomizer = nullptr;
  std::uint8_t bit = 0;
};

// Worst case over neighbors x' and over all realizations of
// |log P(responses | datum) - log P(responses | x')|. Responses are
// conditionally independent given the datum, so the worst realization
// pushes every query in the same direction:
//   max_{x'} max(sum_q up_q(datum, x'), sum_q down_q(datum, x'))
// with up/down from Randomizer::directed_log_ratios. For randomized
// response both directions equal epsilon on each differing query.
// Throws AuditError if a randomizer is missing.
double audit_user(std::span<const UserResponse> responses, const Datum& datum,
                  std::span<const Datum> neighbor_data);

struct UserAudit {
  UserId user = 0;
  double max_log_ratio = 0.0;
};

struct AuditReport {
  std::vector<UserAudit> per_user;  // sorted by user id
  std::optional<UserId> worst_user;

  double max_log_ratio() const;
  const UserAudit* find(UserId user) const;
};

struct AuditOptions {
  // Add the "never matches" sentinel datum to the neighbor set.
  bool include_sentinel = true;
  // Additional alternative data beyond the population's two payloads.
  std::vector<Datum> extra_neighbors;
  kernels::Policy kernel_policy = kernels::Policy::kAuto;
};

// Audits every user in the transcript against the neighbor set
// {alice datum, bob datum} (+ sentinel, + extras). Throws AuditError when a
// transcript entry has no query log entry.
AuditReport audit_transcript(const Transcript& transcript,
                             const Population& population,
                             const QueryLog& query_log,
                             const AuditOptions& options = {});

// Tab-separated: user, max_log_ratio, budget, status (pass/fail at budget).
void write_audit_report(std::ostream& out, const AuditReport& report,
                        double declared_epsilon, double slack = 1e-9);

}  // namespace ldpsim
