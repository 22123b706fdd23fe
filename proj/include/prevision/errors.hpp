#pragma once

#include <stdexcept>
#include <string>

namespace prevision {

/// Malformed or semantically invalid input (bad rational, unknown atom,
/// unsatisfiable antecedent, missing prevision, index out of range, ...).
struct InputError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Problem size exceeds an exhaustive-enumeration cap.
struct CapacityError : std::length_error {
  using std::length_error::length_error;
};

/// An operation was invoked on an object violating its precondition
/// (e.g. extending an incoherent base assessment).
struct StateError : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace prevision
