#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace goldman {

// Exact coefficient arithmetic. All bracket/cohomology coefficients stay
// rational end to end; doubles appear only in the hyperbolic geometry.
using Rational = boost::multiprecision::cpp_rational;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Geometry that cannot be resolved within tolerance (tangent axes, marginal
// predicates that stay marginal after re-conjugation).
struct DegenerateGeometryError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Conjugator enumeration ran out of depth before two consecutive depths agreed.
struct NonStabilizedError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Serialized form is always "numerator/denominator", e.g. "-2/1".
std::string rational_to_string(const Rational& r);

// Accepts "p/q" or a bare integer "p"; throws InputError on anything else.
Rational parse_rational(const std::string& text);

}  // namespace goldman
