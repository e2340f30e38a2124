#pragma once

#include <stdexcept>

namespace pbs {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ParseError : Error { using Error::Error; };
struct InvariantViolation : Error { using Error::Error; };
struct MissingEndpoint : Error { using Error::Error; };
struct DegenerateChain : Error { using Error::Error; };
struct InstanceTooLarge : Error { using Error::Error; };
struct InfeasibleParameters : Error { using Error::Error; };
struct GraphTooSmall : Error { using Error::Error; };
struct ClaimViolation : Error { using Error::Error; };
struct FormulaMismatch : Error { using Error::Error; };
struct NotIndependentDominating : Error { using Error::Error; };

}  // namespace pbs
