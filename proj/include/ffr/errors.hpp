#pragma once

#include <stdexcept>
#include <string>

namespace ffr {

// Malformed input text or document (bad syntax, missing field, wrong type).
struct SchemaError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Objects that do not live over the same ring, or have incompatible shapes.
struct RingMismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A documented precondition does not hold (e.g. negative expected rank).
struct PreconditionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A produced certificate failed its own re-check. Always a bug.
struct VerificationFailure : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace ffr
