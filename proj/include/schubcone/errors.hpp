#pragma once

#include <stdexcept>
#include <string>

namespace schubcone {

// Precondition or parse failure. The message names the violated constraint.
class Error : public std::runtime_error {
 public:
    using std::runtime_error::runtime_error;
};

// Raised when a full enumeration of W would exceed the configured order guard.
class GuardExceeded : public Error {
 public:
    using Error::Error;
};

// Internal consistency check failed (a bug, not bad input).
class InvariantViolation : public std::logic_error {
 public:
    using std::logic_error::logic_error;
};

inline void check_invariant(bool ok, const std::string& what) {
    if (!ok) throw InvariantViolation(what);
}

}  // namespace schubcone
