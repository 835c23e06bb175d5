#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace crslab {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

BigInt big_pow(const BigInt& base, std::uint64_t exp);

// "num/den" in lowest terms, always with an explicit denominator ("3/8", "1/1").
std::string rational_string(const Rational& r);

// Accepts "num/den" or a bare integer.
Rational parse_rational(const std::string& text);

}  // namespace crslab
