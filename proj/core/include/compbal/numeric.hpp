#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace compbal {

// Exact arithmetic backbone. Counts grow like alpha^n, so fixed-width
// integers stop being exact almost immediately; probabilities p_{n,r}
// must be exact rationals.
using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

/// Lossy conversion for reporting. Values beyond double range come back
/// as +/-inf; callers that need a hard failure use checked_to_double.
double to_double(const BigInt& v);
double to_double(const BigRat& v);

/// Natural logarithm of a positive BigInt, exact to double precision
/// even when the value itself does not fit in a double.
double log_big(const BigInt& v);

std::string to_string(const BigInt& v);

/// "p/q" in lowest terms ("p" when the denominator is 1).
std::string to_string(const BigRat& v);

}  // namespace compbal
