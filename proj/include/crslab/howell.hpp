#pragma once

#include <cstdint>
#include <vector>

namespace crslab::crs {

using ZRow = std::vector<std::uint64_t>;
using ZRowList = std::vector<ZRow>;

// Canonical Howell basis of the row span of `rows` inside (Z/N)^width.
//
// The result has strictly increasing pivot columns; each pivot equals
// gcd(entry, N) (a divisor of N); entries above a pivot are reduced below
// it; and for each row with pivot d, (N/d) times the row lies in the span
// of the later rows. Equal spans yield identical output, so the form is a
// canonical key for submodules of (Z/N)^width — which plain echelon forms
// are not over Z/N.
ZRowList howell_form(ZRowList rows, std::uint64_t modulus, std::size_t width);

// Membership of v in the span of a Howell basis.
bool howell_contains(const ZRowList& howell, const ZRow& v, std::uint64_t modulus);

// Generators (in Howell form) of {x in (Z/N)^width : x . a = 0 for every
// constraint row a}.
ZRowList kernel_mod(const ZRowList& constraints, std::uint64_t modulus, std::size_t width);

// A unit u mod N with u*a = gcd(a, N) mod N (a in [1, N)).
std::uint64_t unit_scale(std::uint64_t a, std::uint64_t modulus);

}  // namespace crslab::crs
