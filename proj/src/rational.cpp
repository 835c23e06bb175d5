#include "crslab/rational.hpp"

#include "crslab/errors.hpp"

namespace crslab {

BigInt big_pow(const BigInt& base, std::uint64_t exp) {
  BigInt result = 1;
  BigInt b = base;
  while (exp > 0) {
    if (exp & 1) result *= b;
    exp >>= 1;
    if (exp > 0) b *= b;
  }
  return result;
}

std::string rational_string(const Rational& r) {
  return numerator(r).str() + "/" + denominator(r).str();
}

Rational parse_rational(const std::string& text) {
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rational(BigInt(text));
    BigInt num(text.substr(0, slash));
    BigInt den(text.substr(slash + 1));
    if (den == 0) throw domain_error("rational denominator is zero: " + text);
    return Rational(num, den);
  } catch (const std::runtime_error&) {
    throw domain_error("cannot parse rational: " + text);
  }
}

}  // namespace crslab
