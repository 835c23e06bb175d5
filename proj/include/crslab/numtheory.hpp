#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace crslab::finab {

bool is_prime(std::uint64_t n);

// Prime factorization of n >= 1 as (p, multiplicity) pairs, p ascending.
std::vector<std::pair<std::uint64_t, std::uint32_t>> factorize(std::uint64_t n);

// All divisors of n >= 1, ascending.
std::vector<std::uint64_t> divisors(std::uint64_t n);

// mobius(1) = 1, mobius(n) = 0 if a square divides n, (-1)^t for t distinct primes.
int mobius(std::uint64_t n);

// p-adic valuation: largest k with p^k | n (n >= 1).
std::uint32_t valuation(std::uint64_t n, std::uint64_t p);

// p^e with an overflow check.
std::uint64_t pow_u64_checked(std::uint64_t p, std::uint32_t e);

// lcm with an overflow check.
std::uint64_t lcm_u64_checked(std::uint64_t a, std::uint64_t b);

// If n = p^e for a prime p and e >= 1, fills outputs and returns true.
bool as_prime_power(std::uint64_t n, std::uint64_t* p_out, std::uint32_t* e_out);

}  // namespace crslab::finab
