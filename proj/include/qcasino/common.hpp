#pragma once

#include <stdexcept>
#include <string>

namespace qcasino {

// Base class for all library errors.
struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A precondition on an argument value was violated.
struct precondition_error : error {
  using error::error;
};

// Operand dimensions are incompatible or unsupported.
struct dimension_error : error {
  using error::error;
};

// Input has the wrong structural shape (non power-of-two, bad characters, ...).
struct shape_error : error {
  using error::error;
};

// The result would exceed the dense-representation size cap.
struct capacity_error : error {
  using error::error;
};

// A matrix required to be positive semidefinite is not.
struct not_psd_error : error {
  using error::error;
};

// A matrix required to be Hermitian is not.
struct not_hermitian_error : error {
  using error::error;
};

// A casino bet violates the invariants of its state type.
struct invalid_bet_error : error {
  using error::error;
};

// A measurement's operators do not satisfy the completeness relation.
struct invalid_measurement_error : error {
  using error::error;
};

// A frequency estimate was requested on an empty extraction.
struct undefined_estimate_error : error {
  using error::error;
};

// Bad user-facing configuration (unknown strategy name, bad flag value, ...).
struct config_error : error {
  using error::error;
};

}  // namespace qcasino
