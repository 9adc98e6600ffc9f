#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "ldpsim/core/datum.hpp"
#include "ldpsim/randomizers/randomized_response.hpp"

namespace ldpsim {

// Pointer vectors a, b in [l]^l. Values are 1-indexed: every entry lies in
// [1, l] and a[1] is a.front().
struct PCInstance {
  std::uint32_t k = 1;
  std::uint32_t l = 2;
  std::vector<std::uint32_t> a;
  std::vector<std::uint32_t> b;
  std::uint64_t seed = 0;

  PayloadPtr alice_payload() const;
  PayloadPtr bob_payload() const;
  // Throws std::invalid_argument on size or range violations.
  void validate() const;
};

class PointerPayload final : public Payload {
 public:
  explicit PointerPayload(std::vector<std::uint32_t> pointers)
      : pointers_(std::move(pointers)) {}

  // 1-indexed lookup.
  std::uint32_t at(std::uint32_t index) const { return pointers_[index - 1]; }
  std::size_t size() const { return pointers_.size(); }
  std::string describe() const override;

 private:
  std::vector<std::uint32_t> pointers_;
};

// Entries uniform in [1, l]. Throws std::invalid_argument for k < 1, l < 2.
PCInstance gen_pc_instance(std::uint32_t k, std::uint32_t l,
                           std::uint64_t seed);

// The lower-bound regime k < l / log2(l). Outside it gen still succeeds;
// callers surface a warning.
bool pc_recommended_regime(std::uint32_t k, std::uint32_t l);

// v0 = a[1]; v_i = b[v_{i-1}] for odd i, a[v_{i-1}] for even i; returns v_k.
std::uint32_t chase_oracle(const PCInstance& instance);

// Bits needed for values in [1, l]: ceil(log2 l).
std::uint32_t pointer_width(std::uint32_t l);

// "My side is `side` and bit `bit` (0 = most significant of `width`) of
// (payload[index] - 1) is set."
class PcBitPredicate final : public Predicate {
 public:
  PcBitPredicate(Side side, std::uint32_t index, std::uint32_t bit,
                 std::uint32_t width);

  bool evaluate(const Datum& datum) const override;
  std::string descriptor() const override;

 private:
  Side side_;
  std::uint32_t index_;
  std::uint32_t bit_;
  std::uint32_t width_;
};

}  // namespace ldpsim
