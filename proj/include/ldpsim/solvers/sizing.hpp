#pragma once

#include <cstdint>

namespace ldpsim {

// Smallest integer n with
//   n > 100 * ((e'+2)/(e' sqrt 2))^2 * (2 ceil(log2 B) + 2 + ln(1/beta))
//   n > 25 ln(4/beta)
// where e' = epsilon / 2 is the per-query budget of the hidden layers solver.
std::uint64_t hl_sample_bound(double epsilon, std::uint32_t branching,
                              double beta);

// ceil(100 * ((e+2)/(e sqrt 2))^2 * (ln((k+1) ceil(log2 l)) + ln(2/beta))),
// the group size under which all (k+1) ceil(log2 l) bit queries of the
// pointer chasing solver are correct with probability >= 1 - beta.
std::uint64_t pc_group_bound(double epsilon, std::uint32_t k, std::uint32_t l,
                             double beta);

}  // namespace ldpsim
