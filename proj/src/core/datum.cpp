#include "ldpsim/core/datum.hpp"

#include <string>

#include "ldpsim/core/errors.hpp"

namespace ldpsim {

InteractivityViolation::InteractivityViolation(std::uint32_t user,
                                               std::uint64_t round,
                                               const std::string& what)
    : LdpError("interactivity violation: user " + std::to_string(user) +
               " in round " + std::to_string(round) + ": " + what),
      user_(user),
      round_(round) {}

std::string to_string(Side side) {
  return side == Side::kAlice ? "alice" : "bob";
}

std::string ScalarPayload::describe() const {
  return "scalar(" + std::to_string(value_) + ")";
}

PayloadPtr make_scalar(std::int64_t value) {
  return std::make_shared<const ScalarPayload>(value);
}

Datum sentinel_datum() { return Datum{Side::kAlice, nullptr}; }

std::string describe(const Datum& datum) {
  if (datum.is_sentinel()) return "sentinel";
  return to_string(datum.side) + ":" + datum.payload->describe();
}

}  // namespace ldpsim
