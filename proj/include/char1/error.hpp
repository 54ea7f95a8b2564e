#pragma once

#include <stdexcept>

namespace char1 {

/// A value violates the structural invariants of its type (unsorted
/// breakpoints, discontinuous pieces, non-vertex points, ...), or its text
/// form is malformed.
class invariant_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An operation was called outside its precondition (domain mismatch,
/// evaluation point outside the domain, degenerate unit body, ...).
class precondition_error : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace char1
