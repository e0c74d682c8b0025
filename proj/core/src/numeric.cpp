#include <compbal/numeric.hpp>

#include <cmath>

namespace compbal {

double to_double(const BigInt& v) { return v.convert_to<double>(); }

double to_double(const BigRat& v) { return v.convert_to<double>(); }

double log_big(const BigInt& v) {
  if (v <= 0) return -std::numeric_limits<double>::infinity();
  const auto bits = boost::multiprecision::msb(v);
  if (bits < 900) return std::log(to_double(v));
  // Keep the top 64 bits as the mantissa, account for the shift.
  const unsigned shift = bits - 63;
  const BigInt top = v >> shift;
  return std::log(top.convert_to<double>()) + shift * std::numbers::ln2_v<double>;
}

std::string to_string(const BigInt& v) { return v.str(); }

std::string to_string(const BigRat& v) {
  const BigInt num = boost::multiprecision::numerator(v);
  const BigInt den = boost::multiprecision::denominator(v);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

}  // namespace compbal
