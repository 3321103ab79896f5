#pragma once

#include <gmpxx.h>

#include <string>

namespace heckelab {

// Arbitrary-precision rational, always in lowest terms with the sign on the
// numerator (gmp keeps mpq_class canonical through arithmetic).
using Rational = mpq_class;

// Accepts "p" or "p/q" with an optional leading '-' on p; q must be a
// positive integer. Throws SchemaError on anything else.
Rational rational_from_string(const std::string& text);

// Lowest terms; "p" when the denominator is 1, "p/q" otherwise.
std::string rational_to_string(const Rational& value);

// Floor to an integer. Throws DomainError if the result does not fit a long.
long rational_floor(const Rational& value);

bool rational_is_integer(const Rational& value);

// Pre: rational_is_integer(value) and the value fits a long.
long rational_to_long(const Rational& value);

}  // namespace heckelab
