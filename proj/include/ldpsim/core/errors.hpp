#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace ldpsim {

// Base class for every failure raised by the simulator. Argument validation
// failures use std::invalid_argument directly.
class LdpError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A driver asked for a round that breaks the execution's interactivity mode.
class InteractivityViolation : public LdpError {
 public:
  InteractivityViolation(std::uint32_t user, std::uint64_t round,
                         const std::string& what);

  std::uint32_t user() const { return user_; }
  std::uint64_t round() const { return round_; }

 private:
  std::uint32_t user_;
  std::uint64_t round_;
};

// The driver did not halt within the configured iteration bound.
class DivergenceError : public LdpError {
 public:
  using LdpError::LdpError;
};

class AuditError : public LdpError {
 public:
  using LdpError::LdpError;
};

class ReductionError : public LdpError {
 public:
  using LdpError::LdpError;
};

class SizeGuardError : public LdpError {
 public:
  using LdpError::LdpError;
};

class FormatError : public LdpError {
 public:
  using LdpError::LdpError;
};

}  // namespace ldpsim
