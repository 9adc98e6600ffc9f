#include "ldpsim/solvers/sizing.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "ldpsim/problems/pointer_chasing.hpp"

namespace ldpsim {
namespace {

double rr_constant_sq(double epsilon) {
  double c = (epsilon + 2.0) / (epsilon * std::sqrt(2.0));
  return c * c;
}

void check(double epsilon, double beta) {
  if (!(epsilon > 0) || !std::isfinite(epsilon)) {
    throw std::invalid_argument("sizing: epsilon must be positive");
  }
  if (!(beta > 0 && beta < 1)) {
    throw std::invalid_argument("sizing: beta must be in (0, 1)");
  }
}

std::uint32_t ceil_log2(std::uint32_t x) {
  std::uint32_t w = 0;
  while ((std::uint64_t{1} << w) < x) ++w;
  return w;
}

}  // namespace

std::uint64_t hl_sample_bound(double epsilon, std::uint32_t branching,
                              double beta) {
  check(epsilon, beta);
  if (branching < 1) throw std::invalid_argument("sizing: B must be >= 1");
  double eq = epsilon / 2.0;
  double main = 100.0 * rr_constant_sq(eq) *
                (2.0 * ceil_log2(branching) + 2.0 + std::log(1.0 / beta));
  double floor_term = 25.0 * std::log(4.0 / beta);
  return static_cast<std::uint64_t>(std::floor(std::max(main, floor_term))) +
         1;
}

std::uint64_t pc_group_bound(double epsilon, std::uint32_t k, std::uint32_t l,
                             double beta) {
  check(epsilon, beta);
  if (k < 1 || l < 2) throw std::invalid_argument("sizing: k >= 1, l >= 2");
  double queries = double(k + 1) * pointer_width(l);
  double value = 100.0 * rr_constant_sq(epsilon) *
                 (std::log(queries) + std::log(2.0 / beta));
  return static_cast<std::uint64_t>(std::ceil(value));
}

}  // namespace ldpsim
