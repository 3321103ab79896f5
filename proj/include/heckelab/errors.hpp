#pragma once

#include <stdexcept>

namespace heckelab {

// Structural problems with an input document or argument list.
struct SchemaError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A matrix that fails the invertibility-near-D contract (determinant at
// x = 0 must be a single nonzero monomial c * t^m).
struct InvalidBundleError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An operation needs more x-jet precision than the object tracks.
struct PrecisionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Domain violations on otherwise well-formed data: unadapted frames,
// division by a non-multiple of the defining function, bad block indices.
struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace heckelab
