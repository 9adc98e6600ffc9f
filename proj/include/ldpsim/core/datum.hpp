#pragma once

#include <cstdint>
#include <memory>
#include <string>

namespace ldpsim {

enum class Side : std::uint8_t { kAlice = 0, kBob = 1 };

std::string to_string(Side side);
constexpr Side other(Side side) {
  return side == Side::kAlice ? Side::kBob : Side::kAlice;
}

// Problem-specific part of a user's datum. The engine never looks inside;
// predicates and randomizers downcast to the concrete payload they expect.
class Payload {
 public:
  virtual ~Payload() = default;
  virtual std::string describe() const = 0;
};

using PayloadPtr = std::shared_ptr<const Payload>;

// A plain integer input, used for two-party protocols over small domains.
class ScalarPayload final : public Payload {
 public:
  explicit ScalarPayload(std::int64_t value) : value_(value) {}
  std::int64_t value() const { return value_; }
  std::string describe() const override;

 private:
  std::int64_t value_;
};

PayloadPtr make_scalar(std::int64_t value);

// A user's private input: which of the two instance payloads they hold.
// A null payload is the "never matches" sentinel used by the auditor.
struct Datum {
  Side side = Side::kAlice;
  PayloadPtr payload;

  bool is_sentinel() const { return payload == nullptr; }
  template <class T>
  const T* payload_as() const {
    return dynamic_cast<const T*>(payload.get());
  }
};

Datum sentinel_datum();
std::string describe(const Datum& datum);

}  // namespace ldpsim
